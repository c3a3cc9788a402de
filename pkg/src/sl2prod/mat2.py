"""2x2 matrices over GF(q) and the sharp Bruhat decomposition.

Matrices are row-major 4-tuples (a, b, c, d) of canonical field encodings.
The SL2 constructor validates entries and the determinant; the arithmetic
helpers assume well-formed input and do not re-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldCtx

Mat = tuple[int, int, int, int]

IDENT: Mat = (1, 0, 0, 1)


def sl2(F: FieldCtx, a: int, b: int, c: int, d: int) -> Mat:
    """Validated SL2 element: entries in range, determinant 1."""
    for v in (a, b, c, d):
        F.of(v)
    m = (a, b, c, d)
    if mat_det(F, m) != 1:
        raise ValueError(f"matrix {m} has determinant {mat_det(F, m)}, not 1")
    return m


def mat_det(F: FieldCtx, m: Mat) -> int:
    a, b, c, d = m
    return F.sub(F.mul(a, d), F.mul(b, c))


def mat_mul(F: FieldCtx, x: Mat, y: Mat) -> Mat:
    a, b, c, d = x
    e, f, g, h = y
    return (F.add(F.mul(a, e), F.mul(b, g)), F.add(F.mul(a, f), F.mul(b, h)),
            F.add(F.mul(c, e), F.mul(d, g)), F.add(F.mul(c, f), F.mul(d, h)))


def mat_inv(F: FieldCtx, m: Mat) -> Mat:
    a, b, c, d = m
    det = mat_det(F, m)
    if det == 1:
        return (d, F.neg(b), F.neg(c), a)
    if det == 0:
        raise ZeroDivisionError(f"matrix {m} is singular")
    t = F.inv(det)
    return (F.mul(d, t), F.mul(F.neg(b), t), F.mul(F.neg(c), t), F.mul(a, t))


def mat_neg(F: FieldCtx, m: Mat) -> Mat:
    return (F.neg(m[0]), F.neg(m[1]), F.neg(m[2]), F.neg(m[3]))


def mat_trace(F: FieldCtx, m: Mat) -> int:
    return F.add(m[0], m[3])


def mat_pow(F: FieldCtx, m: Mat, n: int) -> Mat:
    if n < 0:
        return mat_pow(F, mat_inv(F, m), -n)
    r = IDENT
    while n:
        if n & 1:
            r = mat_mul(F, r, m)
        m = mat_mul(F, m, m)
        n >>= 1
    return r


def conjugate(F: FieldCtx, g: Mat, x: Mat) -> Mat:
    """g * x * g^-1."""
    return mat_mul(F, mat_mul(F, g, x), mat_inv(F, g))


def minus_ident(F: FieldCtx) -> Mat:
    n1 = F.neg(1)
    return (n1, 0, 0, n1)


# -- sharp Bruhat form -----------------------------------------------------
#
# Generators: h(a) = diag(a, a^-1), n(a) = h(a) * [[0,1],[-1,0]],
# X12(t) = [[1,t],[0,1]].  Every SL2 element is uniquely h(alpha) X12(psi)
# (the Borel cell, c = 0) or X12(tau) n(alpha) X12(psi) (the big cell).


@dataclass(frozen=True)
class Torus:
    alpha: int
    psi: int


@dataclass(frozen=True)
class BigCell:
    tau: int
    alpha: int
    psi: int

BruhatForm = Torus | BigCell


def bruhat_decompose(F: FieldCtx, m: Mat) -> BruhatForm:
    a, b, c, d = m
    if c == 0:
        return Torus(a, F.div(b, a))
    cinv = F.inv(c)
    return BigCell(F.mul(a, cinv), F.neg(cinv), F.mul(d, cinv))


def bruhat_compose(F: FieldCtx, f: BruhatForm) -> Mat:
    if f.alpha == 0:
        raise ValueError("alpha must be a unit")
    if isinstance(f, Torus):
        return (f.alpha, F.mul(f.alpha, f.psi), 0, F.inv(f.alpha))
    ainv = F.inv(f.alpha)
    # X12(tau) n(alpha) X12(psi) = [[-tau/alpha, alpha - tau*psi/alpha],
    #                               [-1/alpha,   -psi/alpha]]
    return (F.neg(F.mul(f.tau, ainv)),
            F.sub(f.alpha, F.mul(F.mul(f.tau, f.psi), ainv)),
            F.neg(ainv),
            F.neg(F.mul(f.psi, ainv)))


def bruhat_trace(F: FieldCtx, f: BruhatForm) -> int:
    if isinstance(f, Torus):
        return F.add(f.alpha, F.inv(f.alpha))
    return F.neg(F.mul(F.inv(f.alpha), F.add(f.tau, f.psi)))


def bruhat_product(F: FieldCtx, f1: BruhatForm, f2: BruhatForm) -> BruhatForm:
    """Sharp form of compose(f1) * compose(f2), computed symbolically."""
    if isinstance(f1, Torus) and isinstance(f2, Torus):
        a2sq = F.mul(f2.alpha, f2.alpha)
        return Torus(F.mul(f1.alpha, f2.alpha),
                     F.add(F.div(f1.psi, a2sq), f2.psi))
    if isinstance(f1, Torus):
        a1sq = F.mul(f1.alpha, f1.alpha)
        return BigCell(F.mul(a1sq, F.add(f1.psi, f2.tau)),
                       F.mul(f1.alpha, f2.alpha),
                       f2.psi)
    if isinstance(f2, Torus):
        a2sq = F.mul(f2.alpha, f2.alpha)
        return BigCell(f1.tau,
                       F.div(f1.alpha, f2.alpha),
                       F.add(F.div(f1.psi, a2sq), f2.psi))
    s = F.add(f1.psi, f2.tau)
    if s == 0:
        ratio = F.div(f2.alpha, f1.alpha)
        return Torus(F.neg(F.div(f1.alpha, f2.alpha)),
                     F.add(F.mul(F.mul(ratio, ratio), f1.tau), f2.psi))
    sinv = F.inv(s)
    return BigCell(F.sub(f1.tau, F.mul(F.mul(f1.alpha, f1.alpha), sinv)),
                   F.neg(F.mul(F.mul(f1.alpha, f2.alpha), sinv)),
                   F.sub(f2.psi, F.mul(F.mul(f2.alpha, f2.alpha), sinv)))


def iter_sl2(F: FieldCtx):
    """All of SL2(F) in canonical order: row-major lexicographic on entries."""
    q = F.q
    for a in range(q):
        if a == 0:
            for b in range(1, q):
                c = F.neg(F.inv(b))
                for d in range(q):
                    yield (0, b, c, d)
        else:
            ainv = F.inv(a)
            for b in range(q):
                for c in range(q):
                    yield (a, b, c, F.mul(ainv, F.add(1, F.mul(b, c))))
