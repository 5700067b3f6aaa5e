"""Little q-Laguerre identities: index and parameter ladders, the
a-difference equations and the fourth-order q-derivative relation."""

from __future__ import annotations

from ..engine import Erratum, register, simple
from ..families import FamilyId, ParamPoint, family_poly
from ..operators import backward, forward, qdiff
from ..poly import X, ZERO, Poly

G = "lqL"


def P(n: int, a, q, scale_x=1) -> Poly:
    """p_n(scale_x * x; a | q)."""
    if n < 0:
        return ZERO
    return family_poly(FamilyId.lqL, n, ParamPoint(a=a, q=q)).subst_affine(scale_x)


def _aq(th):
    return th["a"], th["q"]


def lownlql(n, k, th):
    a, q = _aq(th)
    lhs = (X * P(n - 1, a * q, q)).scale(q ** (1 - n) / (a * q - 1))
    return lhs, backward(lambda m: P(m, a, q))(n)


def lownuplql(n, k, th):
    a, q = _aq(th)
    lhs = ((X - 1) * P(n, a / q, q, 1 / q)).scale(1 - a)
    rhs = forward(lambda m: P(m, a, q))(n).scale(a * q ** (n + 1) - 1) - Poly.linear(1 - a, a) * P(n, a, q)
    return lhs, rhs


def lowndolql(n, k, th):
    a, q = _aq(th)
    lhs = ((X - 1) * P(n - 1, a / q, q, 1 / q)).scale(1 - a)
    rhs = (Poly.linear((q**n - 1) * a, a) * backward(lambda m: P(m, a, q))(n)
           - Poly.linear(1 - a, a) * P(n, a, q))
    return lhs, rhs


def _D(n, q, base):
    return qdiff(lambda v: P(n, v, q), base)


# Plain a-differences; the printed D_(q,a) and D_(1/q,a) hold only in these forms.
def _up(f, q):
    return lambda v: f(q * v) - f(v)


def _down(f, q):
    return lambda v: f(v) - f(v / q)


def _f(n, q):
    return lambda v: P(n, v, q)


def lowalqL(n, k, th):
    a, q = _aq(th)
    lhs = (X * P(n - 1, a * q, q)).scale(a * (1 - q**n) / (q ** (n - 1) * (1 - a) * (1 - a * q)))
    return lhs, _D(n, q, 1 / q)(a)


def lowalqL_fixed(n, k, th):
    a, q = _aq(th)
    lhs, _ = lowalqL(n, k, th)
    return lhs, _down(_f(n, q), q)(a)


def _raiadolqL(n, th, diff):
    a, q = _aq(th)
    lhs = P(n, a / q, q).scale((a - 1) * q**n * (a * q - 1))
    rhs = ((X * diff(_f(n, q), q)(a)).scale(a * q ** (n + 1) - 1)
           + Poly.linear(q**n * (a * q - 1) * (a - 1), a * q * (q**n - 1)) * P(n, a, q))
    return lhs, rhs


def raiadolqL(n, k, th):
    return _raiadolqL(n, th, lambda f, q: qdiff(f, 1 / q))


def raiadolqL_fixed(n, k, th):
    return _raiadolqL(n, th, _up)


def _raiadolqL2(n, th, diff):
    a, q = _aq(th)
    lhs = P(n - 1, a / q, q).scale(a * (a - 1) * q ** (n - 1) * (q**n - 1))
    rhs = ((Poly.linear(a * q ** (2 * n - 1) - a * q ** (n - 1), 1) * diff(_f(n, q), q)(a)).scale(a - 1)
           + Poly.linear((1 - a) * a * q ** (n - 1) * (q**n - 1), a * (q**n - 1)) * P(n, a, q))
    return lhs, rhs


def raiadolqL2(n, k, th):
    return _raiadolqL2(n, th, qdiff)


def raiadolqL2_fixed(n, k, th):
    lhs, rhs = _raiadolqL2(n, th, _down)
    return -lhs, rhs


def _s(n, a, q):
    return (a - 1) * q**n * (a * q - 1), X.scale(1 - a * q ** (n + 1))


def sodelqL1(n, k, th):
    a, q = _aq(th)
    s, ss = _s(n, a, q)
    f = lambda v: P(n, v, q)
    rhs = qdiff(qdiff(f, q), 1 / q)(a).scale(s) - (s - ss) * qdiff(f, q)(a)
    return (X * P(n, a, q)).scale(a * q * (q**n - 1)), rhs


def sodelqL1_fixed(n, k, th):
    a, q = _aq(th)
    s, ss = _s(n, a, q)
    f = _f(n, q)
    rhs = _down(_up(f, q), q)(a).scale(s) - (s - ss) * _up(f, q)(a)
    return (X * P(n, a, q)).scale(a * q * (q**n - 1)), rhs


def sodelqL2(n, k, th):
    a, q = _aq(th)
    s, ss = _s(n, a, q)
    f = lambda v: P(n, v, q)
    rhs = ss * qdiff(qdiff(f, 1 / q), q)(a) - (s - ss) * qdiff(f, 1 / q)(a)
    return (X * P(n, a, q)).scale(a * q * (q**n - 1)), rhs


def sodelqL2_fixed(n, k, th):
    a, q = _aq(th)
    s, ss = _s(n, a, q)
    f = _f(n, q)
    rhs = ss * _up(_down(f, q), q)(a) - (s - ss) * _down(f, q)(a)
    return (X * P(n, a, q)).scale(a * q * (q**n - 1)), rhs


def _prop4_coeffs(a, q):
    x = X
    p0 = ((x.scale(q**4 * (a * q**3 - a * q - 1 - q - q**2)))
          + Poly.const((a * q**2 - 1) * (a * q**3 - 1 - q - q**2))) / q**3
    p1 = ((x * x).scale(a * q**9)
          + x.scale(q**4 * (a**2 * q**4 + a**2 * q**3 - 1 - a - q - 2 * a * q - q**2 - a * q**2 + a * q**3 + a * q**4))
          + Poly.const((a * q**2 - 1) * (a * q**4 - 1 - q - q**2 + a * q**3))).scale((q - 1) / q**5)
    p2 = ((x * x).scale(a * q**8 * (1 + q + a * q))
          + x.scale(q**3 * (a**2 * q**5 + 2 * a**2 * q**4 - a - q - 2 * a * q - 2 * a * q**2 + a**2 * q**3 + a * q**4))
          + Poly.const((a * q**2 - 1) * (a * q**3 - 1))).scale((q - 1) ** 2 / q**6)
    p3 = (x * (x.scale(q**5 * (1 + a + a * q)) + (1 + q) * (-1 + a * q**3))).scale(a * (q - 1) ** 3 / q**4)
    p4 = (x * x).scale(a**2 * (q - 1) ** 4)
    return p0, p1, p2, p3, p4


def prop4(n, k, th):
    a, q = _aq(th)
    p = P(n, a, q)
    rhs = ZERO
    for c in _prop4_coeffs(a, q):
        rhs = rhs + c * p
        p = p.q_derivative(q)
    pre = (a * q ** (n + 1) - 1) * (a * q ** (n + 2) - 1) / (q ** (3 * n) * (q - 1) * (a * q - 1))
    return P(n + 1, a * q, q, q**4).scale(pre), rhs


register(
    simple("lqL.lownlql", G, "Lemma 4.6 (lownlql)",
           "q^(1-n) x/(aq-1) p_(n-1)(x;aq|q) = nabla_n p_n(x;a|q)", "lqL", lownlql,
           erratum=Erratum("false at n = 0 under p_(-1) = 0 (the left side vanishes, nabla_n p_0 = 1); "
                           "holds for n >= 1", lownlql, n_min=1)),
    simple("lqL.lownuplql", G, "Lemma 4.6 (lownuplql)",
           "(1-a)(x-1) p_n(x/q;a/q|q) = (aq^(n+1)-1) Delta_n p_n - (ax+1-a) p_n", "lqL", lownuplql),
    simple("lqL.lowndolql", G, "Lemma 4.6 (lowndolql)",
           "(1-a)(x-1) p_(n-1)(x/q;a/q|q) = (ax+(q^n-1)a) nabla_n p_n - (ax+1-a) p_n", "lqL", lowndolql,
           erratum=Erratum("false at n = 0 under p_(-1) = 0 (the left side vanishes, the right side is "
                           "(a-1)(x-1)); holds for n >= 1", lowndolql, n_min=1)),
    simple("lqL.lowalqL", G, "Lemma 4.6 (lowalqL)",
           "a(1-q^n)x/(q^(n-1)(1-a)(1-aq)) p_(n-1)(x;aq|q) = D_(1/q,a) p_n(x;a|q)", "lqL", lowalqL,
           erratum=Erratum("holds with D_(1/q,a) read as the plain difference g(a) - g(a/q)",
                           lowalqL_fixed)),
    simple("lqL.raiadolqL", G, "Lemma 4.6 (raiadolqL, first)",
           "(a-1)q^n(aq-1) p_n(x;a/q|q) = (aq^(n+1)-1) x D_(1/q,a) p_n + (aq(q^n-1)x + q^n(aq-1)(a-1)) p_n",
           "lqL", raiadolqL,
           erratum=Erratum("holds with D_(1/q,a) read as the plain difference g(qa) - g(a)",
                           raiadolqL_fixed)),
    simple("lqL.raiadolqL2", G, "Lemma 4.6 (raiadolqL, second)",
           "a(a-1)q^(n-1)(q^n-1) p_(n-1)(x;a/q|q) = (a-1)(x+aq^(2n-1)-aq^(n-1)) D_(q,a) p_n "
           "+ (a(q^n-1)x + (1-a)aq^(n-1)(q^n-1)) p_n", "lqL", raiadolqL2,
           erratum=Erratum("holds with D_(q,a) read as the plain difference g(a) - g(a/q) and the "
                           "left factor a(a-1) read as a(1-a); no form with g(qa) - g(a) and "
                           "x-linear coefficients exists",
                           raiadolqL2_fixed)),
    simple("lqL.sodelqL1", G, "Theorem 4.8 proof (sodelqL1)",
           "aqx(q^n-1) p_n = s_n D_(1/q,a) D_(q,a) p_n - (s_n - s*_n) D_(q,a) p_n", "lqL", sodelqL1, kind="sode",
           erratum=Erratum("holds with D_(q,a) read as g(qa) - g(a) and D_(1/q,a) as g(a) - g(a/q), "
                           "the readings under which the first-order relations hold", sodelqL1_fixed)),
    simple("lqL.sodelqL2", G, "Theorem 4.8 proof (sodelqL2)",
           "aqx(q^n-1) p_n = s*_n D_(q,a) D_(1/q,a) p_n - (s_n - s*_n) D_(1/q,a) p_n", "lqL", sodelqL2,
           kind="sode",
           erratum=Erratum("holds with D_(q,a) read as g(qa) - g(a) and D_(1/q,a) as g(a) - g(a/q)",
                           sodelqL2_fixed)),
    simple("lqL.prop4", G, "Proposition 4",
           "(aq^(n+1)-1)(aq^(n+2)-1)/(q^(3n)(q-1)(aq-1)) p_(n+1)(q^4 x;aq|q) = sum_(k=0..4) p_k(x) D_q^k p_n(x;a|q)",
           "lqL", prop4, kind="proposition",
           erratum=Erratum("fails already at n = 0 with D_q in x; the right side is not a multiple "
                           "of p_m(q^s x; aq^j|q) for small m, j, s under D_q or D_(1/q); no "
                           "correction found, reported without rescaling")),
)
