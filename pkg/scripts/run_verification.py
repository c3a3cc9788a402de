#!/usr/bin/env python3
"""Run the full law-certification suite and write a JSON report.

Checks every pairwise and triple product law against the brute-force
oracle for both SL2 and PSL2 over the default field suite, and records
covering numbers.  Exit status 0 iff everything matches.
"""

import argparse
import json
import sys
import time
from pathlib import Path

from sl2prod import make_field, verify_laws

DEFAULT_SUITE = ["5", "7", "3^2", "11", "13"]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fields", nargs="*", default=DEFAULT_SUITE,
                    help="field descriptors (default: 5 7 3^2 11 13)")
    ap.add_argument("--out", type=Path, default=Path("verification_report.json"))
    args = ap.parse_args()

    reports = []
    t0 = time.monotonic()
    for desc in args.fields:
        parts = desc.split("^")
        F = make_field(int(parts[0]), int(parts[1]) if len(parts) > 1 else 1)
        for kind in ("sl2", "psl2"):
            t1 = time.monotonic()
            rep = verify_laws(F, kind)
            d = rep.to_dict()
            d["seconds"] = round(time.monotonic() - t1, 3)
            reports.append(d)
            status = "PASS" if rep.ok else "FAIL"
            print(f"{status} q={F.q:>3} {kind:>5}: "
                  f"{d['pairs']['checked']} pairs, "
                  f"{d['triples']['checked']} triples, "
                  f"covering={d['covering']}  [{d['seconds']}s]")

    ok = all(r["ok"] for r in reports)
    args.out.write_text(json.dumps(
        {"reports": reports, "ok": ok,
         "seconds": round(time.monotonic() - t0, 3)}, indent=2))
    print(f"report written to {args.out}  ({'ALL PASS' if ok else 'FAILURES'})")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
