"""Constructive certificates for class-product membership.

Every returned witness is re-validated by direct multiplication and
classification; the searches are deterministic (canonical enumeration
order), so identical inputs yield identical witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldCtx, eps_shift_solvable
from .mat2 import (IDENT, Mat, iter_sl2, mat_inv, mat_mul, mat_neg,
                   mat_trace)
from .classes import (PSLLabel, SL2Label, all_classes_sl2, classify_sl2,
                      inverse_class, negate_class, psl_classify,
                      psl_lift_pair, representative)
from .laws import commutator_expressible_psl, sl2_pair_product
from .oracle import enumerate_sl2


@dataclass(frozen=True)
class Factorization:
    x: Mat
    y: Mat
    target: Mat
    left: SL2Label
    right: SL2Label

    def ok(self, F: FieldCtx) -> bool:
        return (mat_mul(F, self.x, self.y) == self.target
                and classify_sl2(F, self.x) == self.left
                and classify_sl2(F, self.y) == self.right)


@dataclass(frozen=True)
class CommutatorCert:
    s: Mat
    u: Mat
    target: Mat
    sign_flipped: bool   # True when [s,u] equals -target (same PSL element)

    def ok(self, F: FieldCtx) -> bool:
        c = mat_mul(F, mat_mul(F, self.s, self.u),
                    mat_mul(F, mat_inv(F, self.s), mat_inv(F, self.u)))
        want = mat_neg(F, self.target) if self.sign_flipped else self.target
        return c == want


def conjugating_element(F: FieldCtx, x: Mat, y: Mat):
    """First h in canonical order with h x h^-1 = y, or None."""
    for h in iter_sl2(F):
        if mat_mul(F, h, x) == mat_mul(F, y, h):
            return h
    return None


def _complete_column(F: FieldCtx, a: int, c: int) -> Mat:
    """Some SL2 matrix with first column (a, c)."""
    if c == 0:
        return (a, 0, 0, F.inv(a))
    return (a, F.neg(F.inv(c)), c, 0)


def _observation_product(F, e1, e2, a, c):
    """(h u1 h^-1, u2) with h completing column (a, c) and u_i = [[1,e_i],[0,1]]."""
    h = _complete_column(F, a, c)
    x = mat_mul(F, mat_mul(F, h, (1, e1, 0, 1)), mat_inv(F, h))
    return x, (1, e2, 0, 1)


def _factor_unipotent_pair(F, g, L1, L2):
    """Constructive path for U x U products via the conjugated-product matrix
    family: trace is 2 - e1*e2*c^2, the c = 0 members are X12(e2 + e1*a^2)."""
    e1, e2 = L1.param, L2.param
    target = classify_sl2(F, g)
    if target.kind == "I":
        if inverse_class(F, L1) != L2:
            return None
        x = representative(F, L1)
        return Factorization(x, mat_inv(F, x), g, L1, L2)
    if target.kind == "U":
        a = eps_shift_solvable(F, e1, e2, target.param)
        if a is None:
            return None
        candidates = [(a, 0)]
    elif target.kind == "-I":
        return None
    elif target.kind == "NU":
        csq = F.div(F.scalar(4), F.mul(e1, e2))
        c = F.sqrt(csq)
        if c is None:
            return None
        candidates = [(a, c) for a in F.elements()]
    else:
        csq = F.div(F.sub(F.scalar(2), target.param), F.mul(e1, e2))
        c = F.sqrt(csq)
        if c is None:
            return None
        candidates = [(0, c)]
    for a, c in candidates:
        x, y = _observation_product(F, e1, e2, a, c)
        prod = mat_mul(F, x, y)
        if classify_sl2(F, prod, check=False) != target:
            continue
        s = conjugating_element(F, prod, g)
        if s is None:
            continue
        sinv = mat_inv(F, s)
        return Factorization(mat_mul(F, mat_mul(F, s, x), sinv),
                             mat_mul(F, mat_mul(F, s, y), sinv), g, L1, L2)
    return None


def _factor_scan(F, g, L1, L2):
    """Deterministic fallback: first x in the canonical order of L1's fiber
    with x^-1 g in L2."""
    T = enumerate_sl2(F)
    for x in T.fiber[L1]:
        y = mat_mul(F, mat_inv(F, x), g)
        if classify_sl2(F, y, check=False) == L2:
            return Factorization(x, y, g, L1, L2)
    return None


def factor_pair(F: FieldCtx, g: Mat, L1: SL2Label, L2: SL2Label):
    """Factor g as x*y with x in L1, y in L2, or None when the product law
    excludes g's class."""
    if classify_sl2(F, g) not in sl2_pair_product(F, L1, L2):
        return None
    # unipotent-family pairs reduce to the U x U construction by sign moves
    red_g, s1, s2 = g, L1, L2
    if s1.kind == "NU":
        red_g, s1 = mat_neg(F, red_g), negate_class(F, s1)
    if s2.kind == "NU":
        red_g, s2 = mat_neg(F, red_g), negate_class(F, s2)
    if s1.kind == "U" and s2.kind == "U":
        got = _factor_unipotent_pair(F, red_g, s1, s2)
        if got is not None:
            x, y = got.x, got.y
            if L1.kind == "NU":
                x = mat_neg(F, x)
            if L2.kind == "NU":
                y = mat_neg(F, y)
            cert = Factorization(x, y, g, L1, L2)
            if cert.ok(F):
                return cert
    cert = _factor_scan(F, g, L1, L2)
    assert cert is not None and cert.ok(F), "law admitted a class with no witness"
    return cert


def factor_pair_psl(F: FieldCtx, g: Mat, P1: PSLLabel, P2: PSLLabel):
    """Factor g itself across SL2 lifts of two PSL classes.

    g is in the lifted product iff it lies in D1*D2 or (-D1)*D2, so two of
    the four lift combinations cover everything and the witness multiplies
    to g exactly, with no sign ambiguity left."""
    D1 = psl_lift_pair(F, P1)[0]
    D2 = psl_lift_pair(F, P2)[0]
    for left in (D1, negate_class(F, D1)):
        cert = factor_pair(F, g, left, D2)
        if cert is not None:
            return cert
    return None


def macbeath_triple(F: FieldCtx, alpha: int, beta: int, gamma: int):
    """(A, B, C) with the given traces and A*B*C = I.

    A starts as the trace-alpha companion matrix; if no B with tr(B) = beta
    and tr(A*B) = gamma exists for it (possible for degenerate central-trace
    triples), A advances through the trace-alpha fiber in canonical order."""
    for v in (alpha, beta, gamma):
        F.of(v)
    companion = (0, F.neg(1), 1, alpha)
    for A in _trace_fiber_from(F, companion, alpha):
        B = _find_second(F, A, beta, gamma)
        if B is not None:
            C = mat_inv(F, mat_mul(F, A, B))
            assert mat_mul(F, mat_mul(F, A, B), C) == IDENT
            return A, B, C
    raise AssertionError("trace triple not realizable; this should not happen")


def _trace_fiber_from(F, first, trace):
    yield first
    for m in iter_sl2(F):
        if m != first and mat_trace(F, m) == trace:
            yield m


def _find_second(F, A, beta, gamma):
    """First B in scan order with tr(B) = beta, det 1, tr(A*B) = gamma."""
    q = F.q
    for a in range(q):
        d = F.sub(beta, a)
        ad1 = F.sub(F.mul(a, d), 1)   # required value of b*c
        for b in range(q):
            if b == 0:
                if ad1 != 0:
                    continue
                for c in range(q):
                    B = (a, 0, c, d)
                    if mat_trace(F, mat_mul(F, A, B)) == gamma:
                        return B
            else:
                c = F.div(ad1, b)
                B = (a, b, c, d)
                if mat_trace(F, mat_mul(F, A, B)) == gamma:
                    return B
    return None


def commutator_witness_psl(F: FieldCtx, g: Mat):
    """CommutatorCert for the image of g, or None when the class is not a
    semisimple-unipotent commutator.  The identity gets the degenerate
    witness u = I."""
    P = psl_classify(F, g)
    if not commutator_expressible_psl(F, P):
        return None
    if P.kind == "P1":
        s = representative(F, _first_semisimple_label(F))
        flipped = g != IDENT
        return CommutatorCert(s, IDENT, g, flipped)
    T = enumerate_sl2(F)
    neg_g = mat_neg(F, g)
    unipotents = [m for m, L in zip(T.elements, T.labels) if L.kind == "U"]
    semis = [m for m, L in zip(T.elements, T.labels) if L.is_semisimple]
    for u in unipotents:
        uinv = mat_inv(F, u)
        gu, ngu = mat_mul(F, g, u), mat_mul(F, neg_g, u)
        for s in semis:
            lhs = mat_mul(F, mat_mul(F, s, u), mat_inv(F, s))
            if lhs == gu:
                return CommutatorCert(s, u, g, False)
            if lhs == ngu:
                return CommutatorCert(s, u, g, True)
    raise AssertionError("expressible class with no commutator witness")


def _first_semisimple_label(F):
    return next(L for L in all_classes_sl2(F) if L.is_semisimple)
