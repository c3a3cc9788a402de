"""Closed-form products of conjugacy classes in SL2(F_q) and PSL2(F_q).

Every pairwise product is described exactly as a set of class labels; the
memberships that the source propositions guard with |k| > 5 are implemented
through the underlying solvability criteria (shift equations in the field),
which stay correct at q = 5.  Triple products are composed from the
pairwise laws, which are complete, so composition is exact.  The oracle
module certifies all of this against brute force.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .field import FieldCtx, eps_shift_solvable
from .classes import (PSLLabel, SL2Label, all_classes_psl, all_classes_sl2,
                      is_q_good, negate_class, psl_lift_pair, psl_project)


@dataclass(frozen=True)
class ProductLaw:
    left: object
    right: object
    classes: frozenset
    rule: str


def _unit_labels(F):
    return (SL2Label("U", 1), SL2Label("U", F.nonsquare_rep))


def _neg_unit_labels(F):
    return (SL2Label("NU", 1), SL2Label("NU", F.nonsquare_rep))


def _semisimple_labels(F):
    return tuple(L for L in all_classes_sl2(F) if L.is_semisimple)


def _unipotents_in_unipotent_pair(F, e1, e2):
    """Unipotent classes meeting U_{e1} * U_{e2}: the off-diagonal entry of
    the trace-2 elements of the product is e2 + e1*a^2 with a a unit."""
    return [U for U in _unit_labels(F)
            if eps_shift_solvable(F, e1, e2, U.param) is not None]


def _semisimple_by_shift(F, shift, cls):
    """Semisimple labels with class(shift - t) == class(cls)."""
    out = []
    for L in _semisimple_labels(F):
        v = F.sub(shift, L.param)
        if v and F.same_class(v, cls):
            out.append(L)
    return out


def sl2_pair_product_law(F: FieldCtx, L1: SL2Label, L2: SL2Label) -> ProductLaw:
    classes, rule = _sl2_pair(F, L1, L2)
    return ProductLaw(L1, L2, classes, rule)


def sl2_pair_product(F: FieldCtx, L1: SL2Label, L2: SL2Label) -> frozenset:
    return _sl2_pair(F, L1, L2)[0]


@lru_cache(maxsize=None)
def _sl2_pair(F, L1, L2):
    if L2.sort_key < L1.sort_key:
        L1, L2 = L2, L1
    # central factors translate the other class
    if L1.kind == "I":
        return frozenset([L2]), "central_translation"
    if L1.kind == "-I":
        return frozenset([negate_class(F, L2)]), "central_translation"

    all_labels = frozenset(all_classes_sl2(F))
    k1, k2 = L1.kind, L2.kind

    if k1 == "U" and k2 == "U":
        out = set(_unipotents_in_unipotent_pair(F, L1.param, L2.param))
        out.update(_semisimple_by_shift(F, F.scalar(2), F.mul(L1.param, L2.param)))
        if L1.param == L2.param:
            out.add(SL2Label("NU", L1.param))
            rule = "unipotent_class_square"
        else:
            rule = "distinct_unipotent_classes"
        if F.same_class(F.neg(L1.param), L2.param):
            out.add(SL2Label("I"))
        return frozenset(out), rule

    if k1 == "U" and k2 == "NU":
        e1, e2 = L1.param, L2.param
        out = set(_semisimple_by_shift(F, F.neg(F.scalar(2)), F.mul(e1, e2)))
        if F.same_class(F.neg(e1), e2):
            out.add(SL2Label("U", F.square_class(F.neg(e1))))
        # trace -2 part: the P-matrix with c = 0 has entry e2 - e1*a^2
        for NU in _neg_unit_labels(F):
            if eps_shift_solvable(F, F.neg(e1), e2, NU.param) is not None:
                out.add(NU)
        if F.same_class(e1, e2):
            out.add(SL2Label("-I"))
        return frozenset(out), "unipotent_times_negative_unipotent"

    if k1 == "NU" and k2 == "NU":
        e1, e2 = L1.param, L2.param
        # (-u)(-u') = uu', so unipotent members follow the negated parameters
        out = set()
        for U in _unit_labels(F):
            if eps_shift_solvable(F, F.neg(e1), F.neg(e2), U.param) is not None:
                out.add(U)
        out.update(_semisimple_by_shift(F, F.scalar(2), F.mul(e1, e2)))
        if e1 == e2:
            out.add(SL2Label("NU", F.square_class(F.neg(e1))))
            rule = "negative_unipotent_class_square"
        else:
            rule = "distinct_negative_unipotent_classes"
        if F.same_class(F.neg(e1), e2):
            out.add(SL2Label("I"))
        return frozenset(out), rule

    if k1 == "U" and L2.is_semisimple:
        return _semisimple_times_unipotent(F, L2, L1.param)

    if k1 == "NU" and L2.is_semisimple:
        return _semisimple_times_negative_unipotent(F, L2, L1.param)

    # both semisimple
    t1, t2 = L1.param, L2.param
    if L1 == L2:
        if k1 == "SS":
            if t1 == 0:
                return all_labels, "semisimple_class_square"
            return all_labels - {SL2Label("-I")}, "semisimple_class_square"
        drop = {SL2Label("-I")} | set(_unit_labels(F))
        if t1 == 0:
            drop = set(_unit_labels(F)) | set(_neg_unit_labels(F))
        return all_labels - drop, "semisimple_class_square"
    if t1 != F.neg(t2):
        drop = {SL2Label("I"), SL2Label("-I")}
    elif k1 == "SS":
        drop = {SL2Label("I")}
    else:
        drop = {SL2Label("I")} | set(_neg_unit_labels(F))
    return all_labels - drop, "distinct_semisimple_classes"


def _semisimple_times_unipotent(F, C, eps):
    t = C.param
    out = set(_semisimple_labels(F))
    if C.kind == "NSS":
        out.discard(C)
    for U in _unit_labels(F):
        if F.same_class(F.sub(t, F.scalar(2)), F.mul(eps, U.param)):
            out.add(U)
    for NU in _neg_unit_labels(F):
        if F.same_class(F.add(t, F.scalar(2)), F.mul(eps, NU.param)):
            out.add(NU)
    return frozenset(out), "semisimple_times_unipotent"


def _semisimple_times_negative_unipotent(F, C, eps):
    t = C.param
    out = set(_semisimple_labels(F))
    if t == 0 and C.kind == "NSS":
        out.discard(C)
    neg_twin = SL2Label(C.kind, F.neg(t))
    if C.kind == "NSS" and neg_twin != C:
        out.discard(neg_twin)
    for U in _unit_labels(F):
        if F.same_class(F.add(t, F.scalar(2)), F.mul(eps, U.param)):
            out.add(U)
    for NU in _neg_unit_labels(F):
        if F.same_class(F.sub(t, F.scalar(2)), F.mul(eps, NU.param)):
            out.add(NU)
    return frozenset(out), "semisimple_times_negative_unipotent"


def sl2_triple_product(F: FieldCtx, L1: SL2Label, L2: SL2Label, L3: SL2Label) -> frozenset:
    """Exact triple product, composed from the complete pairwise laws."""
    out = set()
    for M in _sl2_pair(F, L1, L2)[0]:
        out.update(_sl2_pair(F, M, L3)[0])
    return frozenset(out)


# -- PSL2 ------------------------------------------------------------------


def psl_pair_product_law(F: FieldCtx, P1: PSLLabel, P2: PSLLabel) -> ProductLaw:
    classes, rule = _psl_pair(F, P1, P2)
    return ProductLaw(P1, P2, classes, rule)


def psl_pair_product(F: FieldCtx, P1: PSLLabel, P2: PSLLabel) -> frozenset:
    return _psl_pair(F, P1, P2)[0]


def _psl_unit_labels(F):
    return (PSLLabel("PU", 1), PSLLabel("PU", F.nonsquare_rep))


@lru_cache(maxsize=None)
def _psl_pair(F, P1, P2):
    if P2.sort_key < P1.sort_key:
        P1, P2 = P2, P1
    if P1.kind == "P1":
        return frozenset([P2]), "psl_central_translation"

    all_labels = frozenset(all_classes_psl(F))
    semis = frozenset(P for P in all_labels if P.is_semisimple)

    if P1.kind == "PU" and P2.kind == "PU":
        out = set(_psl_unit_labels(F))
        cls = F.mul(P1.param, P2.param)
        for P in semis:
            t = P.param
            if any(v and F.same_class(v, cls)
                   for v in (F.sub(F.scalar(2), t), F.add(F.scalar(2), t))):
                out.add(P)
        if F.same_class(F.neg(P1.param), P2.param):
            out.add(PSLLabel("P1"))
        return frozenset(out), "psl_unipotent_classes"

    if P1.kind == "PU":
        # semisimple class times unipotent class
        t, eps = P2.param, P1.param
        out = set(semis)
        if t == 0 and not F.is_square(F.neg(1)):
            out.discard(P2)
        for U in _psl_unit_labels(F):
            cls = F.mul(eps, U.param)
            if any(F.same_class(v, cls)
                   for v in (F.sub(t, F.scalar(2)), F.sub(F.neg(t), F.scalar(2))) if v):
                out.add(U)
        return frozenset(out), "psl_semisimple_times_unipotent"

    if P1 == P2:
        if P1.kind == "PNSS" and P1.param == 0:
            return all_labels - set(_psl_unit_labels(F)), "psl_semisimple_class_square"
        return all_labels, "psl_semisimple_class_square"
    return all_labels - {PSLLabel("P1")}, "psl_distinct_semisimple_classes"


def psl_pair_product_via_lifts(F: FieldCtx, P1: PSLLabel, P2: PSLLabel) -> frozenset:
    """Cross-check path: project the product of any two SL2 lifts.

    Changing a lift only negates the product set, which projection erases,
    so one lift per class suffices."""
    D1 = psl_lift_pair(F, P1)[0]
    D2 = psl_lift_pair(F, P2)[0]
    return frozenset(psl_project(F, L) for L in sl2_pair_product(F, D1, D2))


def psl_inverse_class(F: FieldCtx, P: PSLLabel) -> PSLLabel:
    if P.kind == "PU":
        return PSLLabel("PU", F.square_class(F.neg(P.param)))
    return P


def psl_triple_product(F: FieldCtx, P1: PSLLabel, P2: PSLLabel, P3: PSLLabel) -> frozenset:
    out = set()
    for M in _psl_pair(F, P1, P2)[0]:
        out.update(_psl_pair(F, M, P3)[0])
    return frozenset(out)


def psl_distinct_unipotent_product_by_order(F: FieldCtx) -> frozenset:
    """The product of the two distinct PSL unipotent classes, stated through
    the q-good / q-bad order dichotomy of its semisimple members."""
    out = set(_psl_unit_labels(F))
    semis = [P for P in all_classes_psl(F) if P.is_semisimple]
    if F.q % 4 == 1:
        out.update(P for P in semis if P.kind == "PNSS")
        out.update(P for P in semis if P.kind == "PSS" and not is_q_good(F, P))
    else:
        out.update(P for P in semis if P.kind == "PSS")
        out.update(P for P in semis if P.kind == "PNSS" and not is_q_good(F, P))
        out.add(PSLLabel("P1"))
    return frozenset(out)


def commutator_expressible_psl(F: FieldCtx, P: PSLLabel) -> bool:
    """Whether the class elements are commutators of a semisimple and a
    unipotent element of PSL2(q) (the identity via a degenerate witness)."""
    if not P.is_semisimple:
        return True
    if F.q % 4 == 1:
        return is_q_good(F, P)
    return not (P.kind == "PNSS" and is_q_good(F, P))
