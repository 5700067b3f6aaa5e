"""Laguerre identities: index and parameter ladders, Rodrigues forms, and
the third-order differential relation."""

from __future__ import annotations

from fractions import Fraction

from ..arith import factorial, pochhammer
from ..engine import Erratum, register, simple
from ..families import FamilyId, ParamPoint, family_poly
from ..operators import backward, forward, iterate, ladder
from ..poly import ONE, X, ZERO, Poly

G = "L"


def L(n: int, al: Fraction) -> Poly:
    if n < 0:
        return ZERO
    return family_poly(FamilyId.L, n, ParamPoint(alpha=al))


def _al(th):
    return th["alpha"]


def lownL(n, k, th):
    a = _al(th)
    return backward(lambda m: L(m, a))(n), L(n, a - 1)


def raiupnL(n, k, th):
    a = _al(th)
    lhs = L(n, a).scale(a) - forward(lambda m: L(m, a))(n).scale(n + 1)
    return lhs, X * L(n, a + 1)


def raidonL(n, k, th):
    a = _al(th)
    lhs = L(n, a).scale(a) - backward(lambda m: L(m, a))(n).scale(n + a)
    return lhs, X * L(n - 1, a + 1)


def lowaL(n, k, th):
    a = _al(th)
    return backward(lambda b: L(n, b))(a), L(n - 1, a)


def raidoaL(n, k, th):
    a = _al(th)
    lhs = (n + a - X) * L(n, a) - backward(lambda b: L(n, b))(a).scale(a + n)
    return lhs, L(n + 1, a - 1).scale(n + 1)


def raiupaL(n, k, th):
    a = _al(th)
    lhs = (n + 1 + a - X) * L(n, a) - X * forward(lambda b: L(n, b))(a)
    return lhs, L(n + 1, a).scale(n + 1)


def sodeL1(n, k, th):
    a = _al(th)
    f = lambda b: L(n, b)
    rhs = -backward(forward(f))(a).scale(a + n) + (a + n - X) * forward(f)(a)
    return L(n, a).scale(n), rhs


def sodeL2(n, k, th):
    a = _al(th)
    f = lambda b: L(n, b)
    rhs = -X * forward(backward(f))(a) + (a + n - X) * backward(f)(a)
    return L(n, a).scale(n), rhs


# Rodrigues-type ladders.  Division by x^k is cleared by multiplying the
# other side, so both sides stay polynomial.


def LalRF(n, k, th):
    a = _al(th)
    f0 = lambda b: L(n + k, b) / pochhammer(b, n + k)
    fk = ladder(f0, k, backward, lambda j, b: (b + j) * (b + j - 1))
    return (X**k) * L(n, a + k), fk(a).scale(pochhammer(a + k, n))


def LalRF_fixed(n, k, th):
    a = _al(th)
    f0 = lambda b: L(n + k, b) / pochhammer(b + 1, n + k)
    fk = ladder(f0, k, backward, lambda j, b: (b + j) * (b + j - 1))
    return (X**k) * L(n, a + k), fk(a).scale(pochhammer(a + k + 1, n))


def LalRF_step(n, k, th):
    # n!/(a+k+1)_n L_n^(a+k) = (a+k)(a+k-1)/(x(n+1)) nabla_a (n+1)!/(a+k)_(n+1) L_(n+1)^(a+k-1)
    a = _al(th)
    g = lambda b: L(n + 1, b + k - 1).scale(factorial(n + 1) / pochhammer(b + k, n + 1))
    lhs = (X * L(n, a + k)).scale(factorial(n) / pochhammer(a + k + 1, n) * (n + 1))
    return lhs, backward(g)(a).scale((a + k) * (a + k - 1))


def LnRF(n, k, th):
    a = _al(th)
    g = lambda m: ZERO if m < 0 else L(m, a).scale(factorial(m) / pochhammer(a + 1, m))
    rhs = iterate(backward, k, g)(n + k).scale((-1) ** k * pochhammer(a + 1, n + k))
    return (X**k * L(n, a + k)).scale(factorial(n)), rhs


def LnRF_step(n, k, th):
    # n!/(a+k+1)_n L_n^(a+k) = -(a+k)/x nabla_n (n+1)!/(a+k)_(n+1) L_(n+1)^(a+k-1)
    a = _al(th)
    g = lambda m: ZERO if m < 0 else L(m, a + k - 1).scale(factorial(m) / pochhammer(a + k, m))
    lhs = (X * L(n, a + k)).scale(factorial(n) / pochhammer(a + k + 1, n))
    return lhs, backward(g)(n + 1).scale(-(a + k))


def _int_alpha(th: ParamPoint) -> ParamPoint:
    """x^alpha and (n+1)_alpha need integer alpha >= 0 to stay rational."""
    return th.replace(alpha=abs(th["alpha"].numerator) % 7)


def _x_alpha_ladder(h, k):
    # Delta_alpha [x^alpha h(alpha)] = x^alpha (x h(alpha+1) - h(alpha));
    # the common x^alpha is carried implicitly.
    for _ in range(k):
        h = (lambda h_: (lambda b: X * h_(b + 1) - h_(b)))(h)
    return h


def LalRF3(n, k, th):
    a = _al(th)
    h0 = lambda b: L(n - k, b) / pochhammer(n - k + 1, k)
    return L(n, a), _x_alpha_ladder(h0, k)(a).scale((-1) ** k * pochhammer(n + 1, int(a)))


def LalRF3_fixed(n, k, th):
    # (n+1)_alpha / (n-k+1)_(alpha+j) = (n-k)!/n! (n-k+1+alpha)_k / (n-k+1+alpha)_j
    a = _al(th)
    c = factorial(n - k) / factorial(n) * pochhammer(n - k + 1 + a, k)
    h0 = lambda b: L(n - k, b).scale(c / pochhammer(n - k + 1 + a, int(b - a)))
    return L(n, a), _x_alpha_ladder(h0, k)(a).scale((-1) ** k)


def LalRF3_step(n, k, th):
    # x^alpha L_n = -(n+1)_alpha Delta_alpha x^alpha/(n)_alpha L_(n-1), with
    # (n+1)_alpha/(n)_(alpha+1) = 1/n and (n+1)_alpha/(n)_alpha = (n+alpha)/n
    a = _al(th)
    rhs = (X * L(n - 1, a + 1)).scale(Fraction(-1, n)) + L(n - 1, a).scale((n + a) / n)
    return L(n, a), rhs


def _need_n_ge_k(n, k):
    return "needs n >= k" if n < k else None


def LnRF2(n, k, th):
    a = _al(th)
    g = lambda m: L(m, a + k)
    # (Delta_n^k g)(n-k) with g(m) = 0 for m < 0
    return L(n, a), iterate(forward, k, g)(n - k)


def LalRF2(n, k, th):
    a = _al(th)
    return L(n, a + k), iterate(forward, k, lambda b: L(n + k, b))(a)


def prop1_operator(p: Poly, a) -> Poly:
    return ((2 + a - X) * p + (3 * X - 4 - 2 * a) * p.derivative()
            + (2 + a - 3 * X) * p.derivative(2) + X * p.derivative(3))


def _helper_A(p: Poly) -> Poly:
    return p - p.derivative()


def _helper_B(p: Poly, a) -> Poly:
    return X * p.derivative() - (X - a) * p


def prop1_composed(p: Poly, a) -> Poly:
    """B_(a+2)(A(A p)): the first helper twice, then the second at a+2."""
    return _helper_B(_helper_A(_helper_A(p)), a + 2)


def prop1_composition_holds(a, degree: int = 8) -> bool:
    """The composed helper operators equal the third-order operator on every
    polynomial of degree <= ``degree`` (checked on the monomial basis)."""
    return all(prop1_composed(X**j, a) == prop1_operator(X**j, a) for j in range(degree + 1))


def prop1(n, k, th):
    a = _al(th)
    return L(n + 1, a + 1).scale(n + 1), prop1_operator(L(n, a), a)


def prop1_helper1(n, k, th):
    a = _al(th)
    p = L(n, a)
    return p - p.derivative(), L(n, a + 1)


def prop1_helper2(n, k, th):
    a = _al(th)
    p = L(n, a)
    return X * p.derivative() - (X - a) * p, L(n + 1, a - 1).scale(n + 1)


register(
    simple("L.lownL", G, "Lemma 3.5 (lownL)", "nabla_n L_n^(a)(x) = L_n^(a-1)(x)", "L", lownL),
    simple("L.raiupnL", G, "Lemma 3.5 (raiupnL)",
           "a L_n^(a) - (n+1) Delta_n L_n^(a) = x L_n^(a+1)", "L", raiupnL),
    simple("L.raidonL", G, "Lemma 3.5 (raidonL)",
           "a L_n^(a) - (n+a) nabla_n L_n^(a) = x L_(n-1)^(a+1)", "L", raidonL),
    simple("L.lowaL", G, "Lemma 3.5 (lowaL)", "nabla_a L_n^(a) = L_(n-1)^(a)", "L", lowaL),
    simple("L.raidoaL", G, "Lemma 3.5 (raidoaL)",
           "(n+a-x) L_n^(a) - (a+n) nabla_a L_n^(a) = (n+1) L_(n+1)^(a-1)", "L", raidoaL),
    simple("L.raiupaL", G, "Lemma 3.5 (raiupaL)",
           "(n+1+a-x) L_n^(a) - x Delta_a L_n^(a) = (n+1) L_(n+1)^(a)", "L", raiupaL),
    simple("L.sodeL1", G, "Theorem 3.3 proof (sodeL1)",
           "n L_n^(a) = -(a+n) nabla_a Delta_a L_n^(a) + (a+n-x) Delta_a L_n^(a)", "L", sodeL1, kind="sode"),
    simple("L.sodeL2", G, "Theorem 3.3 proof (sodeL2)",
           "n L_n^(a) = -x Delta_a nabla_a L_n^(a) + (a+n-x) nabla_a L_n^(a)", "L", sodeL2, kind="sode"),
    simple("L.LalRF", G, "Theorem 3.4 (LalRF)",
           "L_n^(a+k) = (a+k)_n/x^k (a+k)(a+k-1) nabla_a ... (a+1)a nabla_a L_(n+k)^(a)/(a)_(n+k)",
           "L", LalRF, kind="rodrigues", uses_k=True, step=LalRF_step,
           erratum=Erratum("iterating the single step gives prefactor (a+k+1)_n and inner "
                           "denominator (a+1)_(n+k) in place of (a+k)_n and (a)_(n+k); weights "
                           "apply left to right, step j contributing (a+j)(a+j-1) after its nabla_a",
                           LalRF_fixed)),
    simple("L.LnRF", G, "Theorem 3.4 (LnRF)",
           "L_n^(a+k) = (-1)^k (a+1)_(n+k)/(n! x^k) nabla_n^k (n+k)!/(a+1)_(n+k) L_(n+k)^(a)",
           "L", LnRF, kind="rodrigues", uses_k=True, step=LnRF_step),
    simple("L.LalRF3", G, "Theorem 3.4 (LalRF3)",
           "L_n^(a) = (-1)^k (n+1)_a/x^a Delta_a^k x^a/(n-k+1)_k L_(n-k)^(a)",
           "L", LalRF3, kind="rodrigues", uses_k=True, transform=_int_alpha, skip=_need_n_ge_k,
           n_min=1, step=LalRF3_step,
           erratum=Erratum("the denominator (n-k+1)_k should be (n-k+1)_alpha, which makes the "
                           "identity the k-fold iterate of its single step (whose operator is "
                           "Delta_alpha, not Delta_n); corrected form checked for rational alpha",
                           LalRF3_fixed)),
    simple("L.LnRF2", G, "Theorem 3.4 (LnRF2)", "L_n^(a) = Delta_n^k L_(n-k)^(a+k)",
           "L", LnRF2, kind="rodrigues", uses_k=True),
    simple("L.LalRF2", G, "Theorem 3.4 (LalRF2)", "L_n^(a+k) = Delta_a^k L_(n+k)^(a)",
           "L", LalRF2, kind="rodrigues", uses_k=True),
    simple("L.prop1", G, "Proposition 1",
           "(n+1) L_(n+1)^(a+1) = (2+a-x)L + (3x-4-2a)L' + (2+a-3x)L'' + x L'''", "L", prop1,
           kind="proposition"),
    simple("L.prop1.helper1", G, "Proposition 1 proof, first helper identity",
           "L_n^(a) - (L_n^(a))' = L_n^(a+1)", "L", prop1_helper1, kind="helper"),
    simple("L.prop1.helper2", G, "Proposition 1 proof, second helper identity",
           "x (L_n^(a))' - (x-a) L_n^(a) = (n+1) L_(n+1)^(a-1)", "L", prop1_helper2, kind="helper"),
)
