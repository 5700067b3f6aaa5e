"""Stieltjes-Wigert identities: index ladders, Rodrigues forms and the
q-derivative raising relation."""

from __future__ import annotations

from ..arith import qpochhammer
from ..engine import Erratum, register, simple
from ..families import FamilyId, ParamPoint, family_poly
from ..operators import backward, forward, ladder
from ..poly import X, ZERO, Poly

G = "SW"


def S(n: int, q, scale_x=1) -> Poly:
    """S_n(scale_x * x; q)."""
    if n < 0:
        return ZERO
    return family_poly(FamilyId.SW, n, ParamPoint(q=q)).subst_affine(scale_x)


def rainSW(n, k, th):
    q = th["q"]
    return backward(lambda m: S(m, q))(n), (X * S(n - 1, q, q)).scale(-(q**n))


def lowupnSW(n, k, th):
    q = th["q"]
    lhs = S(n, q) + forward(lambda m: S(m, q))(n).scale(q ** (-n - 1))
    return lhs, S(n + 1, q, 1 / q)


def lowdwnSW(n, k, th):
    q = th["q"]
    lhs = S(n, q) - backward(lambda m: S(m, q))(n).scale(1 - q ** (-n))
    return lhs, S(n, q, 1 / q)


def SWnRF(n, k, th):
    # (-x)^k S_n(x) = q^(-n) nabla_n ... q^(-n) nabla_n S_(n+k)(x/q^k)
    q = th["q"]
    w = ladder(lambda m: S(m + k, q, q ** (-k)), k, backward, lambda j, m: q ** (-m))
    return (-X) ** k * S(n, q), w(n)


def SWnRF_step(n, k, th):
    # rainSW at index n+1, the form each induction step uses
    q = th["q"]
    return backward(lambda m: S(m, q))(n + 1).scale(q ** (-n - 1)), (-X) * S(n, q, q)


def _SWnRF2(n, k, q, sign):
    # k factors q^(-n+k-j) Delta_n, j = 1..k, the outermost being q^(-n); the
    # innermost operand is sign(n)/(q;q)_(n-k) S_(n-k)(xq^k)
    def v0(m):
        if m - k < 0:
            return ZERO
        return S(m - k, q, q**k).scale(sign(m) / qpochhammer(q, q, m - k))

    v = ladder(v0, k, forward, lambda j, m: q ** (-m + k - j))
    return S(n, q), v(n).scale(sign(n) * qpochhammer(q, q, n))


def SWnRF2(n, k, th):
    return _SWnRF2(n, k, th["q"], lambda m: (-1) ** m)


def SWnRF2_fixed(n, k, th):
    return _SWnRF2(n, k, th["q"], lambda m: 1)


def _SWnRF2_step(n, q, sign):
    def g(m):
        return ZERO if m < 1 else S(m - 1, q, q).scale(sign(m) / qpochhammer(q, q, m - 1))

    return S(n, q).scale(sign(n) * q**n / qpochhammer(q, q, n)), forward(g)(n)


def SWnRF2_step(n, k, th):
    return _SWnRF2_step(n, th["q"], lambda m: (-1) ** m)


def SWnRF2_step_fixed(n, k, th):
    return _SWnRF2_step(n, th["q"], lambda m: 1)


def prop5(n, k, th):
    q = th["q"]
    p = S(n, q)
    lhs = (q - X) * p + (X * p.inverse_q_derivative(q)).scale(1 - q)
    return lhs, S(n + 1, q, 1 / q**2).scale(q)


register(
    simple("SW.rainSW", G, "Lemma 4.7 (rainSW)", "nabla_n S_n(x;q) = -q^n x S_(n-1)(qx;q)", "SW", rainSW,
           erratum=Erratum("false at n = 0 under S_(-1) = 0 (nabla_n S_0 = 1, the right side vanishes); "
                           "holds for n >= 1", rainSW, n_min=1)),
    simple("SW.lowupnSW", G, "Lemma 4.7 (lowupnSW)",
           "S_n(x;q) + q^(-n-1) Delta_n S_n(x;q) = S_(n+1)(x/q;q)", "SW", lowupnSW),
    simple("SW.lowdwnSW", G, "Lemma 4.7 (lowdwnSW)",
           "S_n(x;q) - (1-q^(-n)) nabla_n S_n(x;q) = S_n(x/q;q)", "SW", lowdwnSW),
    simple("SW.SWnRF", G, "Theorem 4.9 (SWnRF)",
           "S_n(x;q) = (-x)^(-k) q^(-n) nabla_n ... q^(-n) nabla_n S_(n+k)(x/q^k;q)", "SW", SWnRF,
           kind="rodrigues", uses_k=True, step=SWnRF_step),
    simple("SW.SWnRF2", G, "Theorem 4.9 (SWnRF2)",
           "S_n(x;q) = (-1)^n (q;q)_n q^(-n) Delta_n ... q^(-n+k-1) Delta_n (-1)^n/(q;q)_(n-k) S_(n-k)(xq^k;q)",
           "SW", SWnRF2, kind="rodrigues", uses_k=True, step=SWnRF2_step,
           erratum=Erratum("the signs (-1)^n are spurious: lowupnSW gives "
                           "q^n/(q;q)_n S_n(x) = Delta_n 1/(q;q)_(n-1) S_(n-1)(xq), and with both "
                           "(-1)^n dropped the k-fold ladder holds; weights read as q^(-n+k-j) for "
                           "the j-th innermost Delta_n", SWnRF2_fixed)),
    simple("SW.prop5", G, "Proposition 5",
           "(q-x) S_n(x;q) + (1-q) x D_(1/q) S_n(x;q) = q S_(n+1)(x/q^2;q)", "SW", prop5, kind="proposition"),
)
