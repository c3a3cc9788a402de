"""Exhaustive ground truth for SL2(F_q)/PSL2(F_q) class products.

Enumerates the full group, computes literal class products, certifies every
closed-form law, and computes covering numbers.  Everything here is exact;
any disagreement with the laws module is reported with a counterexample.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .field import FieldCtx
from .mat2 import Mat, iter_sl2, mat_inv, mat_mul
from .classes import (PSLLabel, SL2Label, all_classes_psl, all_classes_sl2,
                      classify_sl2, psl_lift_pair, psl_project, representative,
                      sort_labels)
from . import laws

DEFAULT_MAX_Q = 31


class GroupTable:
    """All of SL2(F_q) in canonical order with its class partition."""

    def __init__(self, F: FieldCtx):
        self.field = F
        self.elements: list[Mat] = list(iter_sl2(F))
        self.labels: list[SL2Label] = [classify_sl2(F, m, check=False)
                                       for m in self.elements]
        self.fiber: dict[SL2Label, list[Mat]] = {L: [] for L in all_classes_sl2(F)}
        for m, L in zip(self.elements, self.labels):
            self.fiber[L].append(m)
        self._pair_cache: dict = {}
        self._psl_pair_cache: dict = {}

    @property
    def order(self) -> int:
        return len(self.elements)


_tables: dict[FieldCtx, GroupTable] = {}


def enumerate_sl2(F: FieldCtx, max_q: int = DEFAULT_MAX_Q) -> GroupTable:
    """Complete group table; refuses q beyond the configured bound."""
    if F.q > max_q:
        raise ValueError(f"q = {F.q} exceeds the enumeration bound {max_q}")
    table = _tables.get(F)
    if table is None:
        table = _tables[F] = GroupTable(F)
    return table


def brute_pair_product(T: GroupTable, L1: SL2Label, L2: SL2Label,
                       paranoid: bool = False) -> frozenset:
    """Exact label set of C1*C2.

    Default mode multiplies the full fiber of L1 by one representative of
    L2, which covers every class in the product since any element of C1*C2
    is conjugate to such a product.  Paranoid mode runs the literal double
    loop."""
    F = T.field
    if not paranoid:
        key = (L1, L2)
        cached = T._pair_cache.get(key)
        if cached is not None:
            return cached
        y = representative(F, L2)
        out = frozenset(classify_sl2(F, mat_mul(F, x, y), check=False)
                        for x in T.fiber[L1])
        T._pair_cache[key] = out
        return out
    return frozenset(classify_sl2(F, mat_mul(F, x, y), check=False)
                     for x in T.fiber[L1] for y in T.fiber[L2])


def brute_pair_product_psl(T: GroupTable, P1: PSLLabel, P2: PSLLabel) -> frozenset:
    """Exact PSL label set; one SL2 lift per class suffices because switching
    a lift only negates the product set, which projection erases."""
    key = (P1, P2)
    cached = T._psl_pair_cache.get(key)
    if cached is not None:
        return cached
    F = T.field
    D1 = psl_lift_pair(F, P1)[0]
    D2 = psl_lift_pair(F, P2)[0]
    y = representative(F, D2)
    out = frozenset(psl_project(F, classify_sl2(F, mat_mul(F, x, y), check=False))
                    for x in T.fiber[D1])
    T._psl_pair_cache[key] = out
    return out


def brute_triple_product(T: GroupTable, L1, L2, L3, kind: str = "sl2") -> frozenset:
    """Triple product composed from certified brute pair tables; exact since
    class products are conjugation closed."""
    pair = brute_pair_product if kind == "sl2" else brute_pair_product_psl
    out = set()
    for M in pair(T, L1, L2):
        out.update(pair(T, M, L3))
    return frozenset(out)


def brute_commutator_set(T: GroupTable, kind: str = "psl2") -> frozenset:
    """Labels of [s, u] over semisimple s and unipotent u.

    u runs over one representative per unipotent class plus the identity
    (conjugating the pair sweeps the commutator's class, and the identity
    is only reachable through the degenerate witness u = 1)."""
    F = T.field
    u_reps = [representative(F, SL2Label("U", 1)),
              representative(F, SL2Label("U", F.nonsquare_rep))]
    semis = [m for m, L in zip(T.elements, T.labels) if L.is_semisimple]
    out = set()
    for u in u_reps:
        uinv = mat_inv(F, u)
        for s in semis:
            c = mat_mul(F, mat_mul(F, s, u), mat_mul(F, mat_inv(F, s), uinv))
            out.add(classify_sl2(F, c, check=False))
    out.add(SL2Label("I"))
    if kind == "sl2":
        return frozenset(out)
    return frozenset(psl_project(F, L) for L in out)


# -- verification ------------------------------------------------------------


@dataclass
class Mismatch:
    where: tuple
    law: tuple
    brute: tuple
    counterexample: Mat | None = None

    def to_dict(self):
        return {"where": [str(L) for L in self.where],
                "law": [str(L) for L in self.law],
                "brute": [str(L) for L in self.brute],
                "counterexample": list(self.counterexample) if self.counterexample else None}


@dataclass
class VerificationReport:
    q: int
    kind: str
    pair_count: int = 0
    pair_mismatches: list = dc_field(default_factory=list)
    triple_count: int = 0
    triple_mismatches: list = dc_field(default_factory=list)
    containment_failures: list = dc_field(default_factory=list)
    covering: tuple | None = None

    @property
    def ok(self) -> bool:
        return not (self.pair_mismatches or self.triple_mismatches
                    or self.containment_failures)

    def to_dict(self):
        return {
            "q": self.q,
            "group": self.kind,
            "pairs": {"checked": self.pair_count,
                      "failures": [m.to_dict() for m in self.pair_mismatches]},
            "triples": {"checked": self.triple_count,
                        "failures": [m.to_dict() for m in self.triple_mismatches],
                        "containment_failures": self.containment_failures},
            "covering": (None if self.covering is None
                         else {"cn": self.covering[0], "ecn": self.covering[1]}),
            "ok": self.ok,
        }


def _pair_counterexample(T: GroupTable, L1, L2, missing):
    """A concrete product landing in a class the law missed."""
    F = T.field
    y = representative(F, L2)
    for x in T.fiber[L1]:
        if classify_sl2(F, mat_mul(F, x, y), check=False) in missing:
            return mat_mul(F, x, y)
    return None


def triple_containment_expected(F, kind, trip):
    """Where the source results promise G minus centers inside C1*C2*C3."""
    if any(L.is_central for L in trip):
        return False
    if len(set(trip)) < 2:
        return False
    if kind == "psl2":
        return True
    if F.q > 5:
        return True
    # over F_5 the containment is only established for lifts of triples with
    # at least two distinct PSL2 classes and zero or >= 2 semisimple members
    if len({psl_project(F, L) for L in trip}) < 2:
        return False
    return sum(L.is_semisimple for L in trip) != 1


def verify_laws(F: FieldCtx, kind: str, max_q: int = DEFAULT_MAX_Q,
                with_covering: bool = True) -> VerificationReport:
    """Compare every pairwise and triple law with brute force."""
    if kind not in ("sl2", "psl2"):
        raise ValueError(f"kind must be sl2 or psl2, got {kind!r}")
    T = enumerate_sl2(F, max_q=max_q)
    report = VerificationReport(q=F.q, kind=kind)

    if kind == "sl2":
        labels = all_classes_sl2(F)
        law_pair = lambda a, b: laws.sl2_pair_product(F, a, b)
        law_triple = lambda a, b, c: laws.sl2_triple_product(F, a, b, c)
        brute_pair = lambda a, b: brute_pair_product(T, a, b)
        central = {SL2Label("I"), SL2Label("-I")}
    else:
        labels = all_classes_psl(F)
        law_pair = lambda a, b: laws.psl_pair_product(F, a, b)
        law_triple = lambda a, b, c: laws.psl_triple_product(F, a, b, c)
        brute_pair = lambda a, b: brute_pair_product_psl(T, a, b)
        central = {PSLLabel("P1")}

    for L1 in labels:
        for L2 in labels:
            report.pair_count += 1
            law = law_pair(L1, L2)
            brute = brute_pair(L1, L2)
            if law != brute:
                ce = None
                if kind == "sl2" and (brute - law):
                    ce = _pair_counterexample(T, L1, L2, brute - law)
                report.pair_mismatches.append(
                    Mismatch((L1, L2), sort_labels(law), sort_labels(brute), ce))

    full = frozenset(labels)
    noncentral = full - central
    for trip in itertools.combinations_with_replacement(labels, 3):
        report.triple_count += 1
        law = law_triple(*trip)
        brute = brute_triple_product(T, *trip, kind=kind)
        if law != brute:
            report.triple_mismatches.append(
                Mismatch(trip, sort_labels(law), sort_labels(brute)))
        if triple_containment_expected(F, kind, trip) and not noncentral <= law:
            report.containment_failures.append({
                "triple": [str(L) for L in trip],
                "missing": [str(L) for L in sort_labels(noncentral - law)]})

    if with_covering:
        report.covering = covering_numbers(F, kind, max_q=max_q)
    return report


# -- covering numbers --------------------------------------------------------


def _compose(pair_table, S, C):
    out = set()
    for M in S:
        out.update(pair_table[(M, C)])
    return frozenset(out)


def covering_numbers(F: FieldCtx, kind: str, limit: int = 8,
                     max_q: int = DEFAULT_MAX_Q) -> tuple:
    """(cn, ecn) computed from literal brute n-fold class products.

    cn: least n with C^n = G for every non-central class C.
    ecn: least n with C_1...C_n = G for every n-tuple of non-central classes.
    Returns None in a slot not reached within `limit`."""
    T = enumerate_sl2(F, max_q=max_q)
    if kind == "sl2":
        labels = all_classes_sl2(F)
        noncentral = [L for L in labels if not L.is_central]
        pair = lambda a, b: brute_pair_product(T, a, b)
    else:
        labels = all_classes_psl(F)
        noncentral = [L for L in labels if not L.is_central]
        pair = lambda a, b: brute_pair_product_psl(T, a, b)
    full = frozenset(labels)
    pair_table = {(a, b): pair(a, b) for a in labels for b in noncentral}

    cn = None
    for n in range(1, limit + 1):
        good = True
        for C in noncentral:
            S = frozenset([C])
            for _ in range(n - 1):
                S = _compose(pair_table, S, C)
            if S != full:
                good = False
                break
        if good:
            cn = n
            break

    ecn = None
    level = {frozenset([C]) for C in noncentral}
    if all(S == full for S in level):
        ecn = 1
    else:
        for n in range(2, limit + 1):
            level = {_compose(pair_table, S, C) for S in level for C in noncentral}
            if all(S == full for S in level):
                ecn = n
                break
    return cn, ecn
