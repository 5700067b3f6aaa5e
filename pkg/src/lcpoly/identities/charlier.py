"""Charlier identities: index ladders and the a-derivative lowering relation."""

from __future__ import annotations

from fractions import Fraction

from ..arith import factorial
from ..engine import Erratum, register, simple
from ..families import FamilyId, ParamPoint, family_poly
from ..operators import ParamPoly, backward, forward, interpolation_nodes, iterate
from ..poly import X, ZERO, Poly, pochhammer_poly

G = "C"


def C(n: int, a: Fraction, shift=0) -> Poly:
    if n < 0:
        return ZERO
    return family_poly(FamilyId.C, n, ParamPoint(a=a)).shift(shift)


def _a(th):
    return th["a"]


def rainC(n, k, th):
    a = _a(th)
    return forward(lambda m: C(m, a))(n).scale(a), -X * C(n, a, -1)


def _scaled_a_derivative(n: int, a: Fraction) -> Poly:
    """n C_n + a dC_n/da, computed exactly.

    a^n C_n(x;a) = P(a) is a polynomial of degree n in a, so
    n C_n + a C_n' = a^(1-n) P'(a).
    """
    if n == 0:
        return ZERO
    P = ParamPoly.interpolate(lambda v: C(n, v).scale(v**n), n, interpolation_nodes(n + 2, lambda v: v == 0))
    return P.derivative().eval(a).scale(a ** (1 - n))


def lowDC(n, k, th):
    a = _a(th)
    return _scaled_a_derivative(n, a), C(n - 1, a).scale(n + 1)


def lowDC_fixed(n, k, th):
    a = _a(th)
    return _scaled_a_derivative(n, a), C(n - 1, a).scale(n)


def lowdonC(n, k, th):
    a = _a(th)
    lhs = C(n, a).scale(a - n) + backward(lambda m: C(m, a))(n).scale(n)
    return lhs, C(n, a, 1).scale(a)


def lowupnC(n, k, th):
    a = _a(th)
    lhs = C(n, a).scale(a - n - 1) + forward(lambda m: C(m, a))(n).scale(a)
    return lhs, C(n + 1, a, 1).scale(a)


def CnRF(n, k, th):
    # (x+1)_k C_n(x) = (-a)^k Delta_n^k C_n(x+k)
    a = _a(th)
    rhs = iterate(forward, k, lambda m: C(m, a, k))(n).scale((-a) ** k)
    return pochhammer_poly(X + 1, k) * C(n, a), rhs


def _h(a):
    # a^m/m! C_m(x - s), zero for m < 0 (1/m! vanishes there)
    return lambda s: (lambda m: ZERO if m < 0 else C(m, a, -s).scale(a**m / factorial(m)))


def CnRF2(n, k, th):
    a = _a(th)
    rhs = iterate(forward, k, _h(a)(k))(n - k).scale(factorial(n) / a**n)
    return C(n, a), rhs


def CnRF2_step(n, k, th):
    a = _a(th)
    lhs = forward(_h(a)(0))(n).scale(factorial(n + 1))
    return lhs, C(n + 1, a, 1).scale(a ** (n + 1))


register(
    simple("C.rainC", G, "Lemma 3.6 (rainC)", "a Delta_n C_n(x;a) = -x C_n(x-1;a)", "C", rainC),
    simple("C.lowDC", G, "Lemma 3.6 (lowDC)", "n C_n(x;a) + a dC_n(x;a)/da = (n+1) C_(n-1)(x;a)", "C", lowDC,
           erratum=Erratum("with ' read as d/da (the reading consistent with the Laguerre link) the "
                           "factor on the right is n, not n+1; d/dx fails for every n >= 1",
                           lowDC_fixed)),
    simple("C.lowdonC", G, "Lemma 3.6 (lowdonC)",
           "(a-n) C_n(x;a) + n nabla_n C_n(x;a) = a C_n(x+1;a)", "C", lowdonC),
    simple("C.lowupnC", G, "Lemma 3.6 (lowupnC)",
           "(a-n-1) C_n(x;a) + a Delta_n C_n(x;a) = a C_(n+1)(x+1;a)", "C", lowupnC),
    simple("C.CnRF", G, "Theorem 3.5 (CnRF)", "C_n(x;a) = (-a)^k/(x+1)_k Delta_n^k C_n(x+k;a)", "C", CnRF,
           kind="rodrigues", uses_k=True),
    simple("C.CnRF2", G, "Theorem 3.5 (CnRF2)",
           "C_n(x;a) = n!/a^n Delta_n^k a^(n-k)/(n-k)! C_(n-k)(x-k;a)", "C", CnRF2,
           kind="rodrigues", uses_k=True),
    simple("C.CnRF2.proof", G, "Theorem 3.5 proof identity",
           "(n+1)! Delta_n a^n/n! C_n(x;a) = a^(n+1) C_(n+1)(x+1;a)", "C", CnRF2_step, kind="helper"),
)
