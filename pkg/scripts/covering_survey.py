#!/usr/bin/env python3
"""Survey covering and extended covering numbers over a range of q.

Tabulates (cn, ecn) for SL2(q) and PSL2(q).  The expected value is (3, 4)
everywhere except SL2(5), whose unipotent classes square too small.
"""

import argparse
import sys

from sl2prod import covering_numbers, make_field

DEFAULT = ["5", "7", "3^2", "11", "13"]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fields", nargs="*", default=DEFAULT)
    ap.add_argument("--max-q", type=int, default=31)
    args = ap.parse_args()

    print(f"{'q':>4} {'SL2 (cn,ecn)':>14} {'PSL2 (cn,ecn)':>15}")
    for desc in args.fields:
        parts = desc.split("^")
        F = make_field(int(parts[0]), int(parts[1]) if len(parts) > 1 else 1)
        sl = covering_numbers(F, "sl2", max_q=args.max_q)
        psl = covering_numbers(F, "psl2", max_q=args.max_q)
        print(f"{F.q:>4} {str(sl):>14} {str(psl):>15}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
