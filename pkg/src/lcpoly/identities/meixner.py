"""Meixner identities: index, beta and c ladders, the beta-difference
equation, Rodrigues forms and the third-order difference relation."""

from __future__ import annotations

from fractions import Fraction

from ..arith import pochhammer
from ..engine import Erratum, register, simple
from ..families import FamilyId, ParamPoint, family_poly
from ..operators import ParamPoly, backward, forward, interpolation_nodes, iterate, ladder
from ..poly import ONE, X, ZERO, Poly, pochhammer_poly

G = "M"


def M(n: int, b: Fraction, c: Fraction, shift=0) -> Poly:
    if n < 0:
        return ZERO
    return family_poly(FamilyId.M, n, ParamPoint(beta=b, c=c)).shift(shift)


def _bc(th):
    return th["beta"], th["c"]


def _params_ok(th):
    return th["beta"] not in (0, 2)


def shift_rec(n, k, th):
    b, c = _bc(th)
    p = lambda m: M(m, b, c).scale(c**m)  # M_n / M_n(-beta) = c^n M_n
    al, ga = (n + b) / (c - 1), n * c / (c - 1)
    rhs = p(n + 1).scale(al) - p(n).scale(al + ga) + p(n - 1).scale(ga)
    return (X + b) * p(n), rhs


def shift_sode(n, k, th):
    b, c = _bc(th)
    p = lambda m: ZERO if m < 0 else M(m, b, c).scale(c**m)
    al, ga = (n + b) / (c - 1), n * c / (c - 1)
    rhs = backward(forward(p))(n).scale(ga) + forward(p)(n).scale(al - ga)
    return (X + b) * p(n), rhs


def rainM(n, k, th):
    b, c = _bc(th)
    lhs = forward(lambda m: M(m, b, c))(n).scale(b * c / (c - 1))
    return lhs, X * M(n, b + 1, c, -1)


def raiupnM(n, k, th):
    b, c = _bc(th)
    lhs = M(n, b, c) + forward(lambda m: M(m, b, c))(n).scale(c / (c - 1))
    return lhs, (X + b) * M(n, b + 1, c) / b


def raidonM(n, k, th):
    b, c = _bc(th)
    lhs = M(n, b, c) + backward(lambda m: M(m, b, c))(n).scale(1 / (c - 1))
    return lhs, (X + b) * M(n - 1, b + 1, c) / b


def lowbM(n, k, th):
    b, c = _bc(th)
    lhs = backward(lambda v: M(n, v, c))(b).scale(c * b * (1 - b) / (c - 1))
    return lhs, (X * M(n - 1, b + 1, c, -1)).scale(n)


def raiupbM(n, k, th):
    b, c = _bc(th)
    r = b * (b - 1) / ((b + n) * (c - 1))
    lhs = M(n + 1, b - 1, c, 1).scale(r * c)
    rhs = (X + b + r) * M(n, b, c) + (X + b) * forward(lambda v: M(n, v, c))(b)
    return lhs, rhs


def raidobM(n, k, th):
    b, c = _bc(th)
    r = (b - 1) * (b - 2) / ((b - 1 + n) * (c - 1))
    lhs = M(n + 1, b - 2, c, 1).scale(r * c)
    rhs = (X + b - 1 + r) * M(n, b, c) - backward(lambda v: M(n, v, c))(b).scale(r)
    return lhs, rhs


# c-derivatives act on F_n(beta; c) = c^n (beta)_n M_n(x; beta, c), which
# is a polynomial of degree n in c.


def F(n: int, b: Fraction, c: Fraction) -> Poly:
    if n < 0:
        return ZERO
    return M(n, b, c).scale(c**n * pochhammer(b, n))


def _c_nodes(count: int) -> list[Fraction]:
    return interpolation_nodes(count, lambda v: v in (0, 1))


def F_in_c(n: int, b: Fraction) -> ParamPoly:
    return ParamPoly.interpolate(lambda v: F(n, b, v), n, _c_nodes(n + 2))


def lowcM(n, k, th):
    b, c = _bc(th)
    lhs = F_in_c(n, b).derivative().eval(c)
    rhs = ((X + b) * M(n - 1, b + 1, c)).scale(n * c**n * pochhammer(b + 1, n) / (c + n + b))
    return lhs, rhs


def lowcM_fixed(n, k, th):
    b, c = _bc(th)
    return F_in_c(n, b).derivative().eval(c), ((X + b) * F(n - 1, b + 1, c)).scale(n)


def raidcM(n, k, th):
    b, c = _bc(th)
    lhs = M(n + 1, b - 1, c).scale(c * (1 - b) * c**n * pochhammer(b, n) * b)
    rhs = (F_in_c(n, b).derivative().eval(c).scale(c * (1 - c))
           - ((c - 1) * X + n - (n + 1) * c + c * b) * F(n, b, c).scale(b))
    return lhs, rhs


def raidcM_fixed(n, k, th):
    b, c = _bc(th)
    lhs = M(n + 1, b - 1, c).scale(c * (1 - b) * c**n * pochhammer(b, n))
    rhs = (F_in_c(n, b).derivative().eval(c).scale(c * (1 - c))
           - ((c - 1) * X + n - (n + 1) * c + c * b) * F(n, b, c))
    return lhs, rhs


def sodeM(n, k, th):
    b, c = _bc(th)
    f = lambda v: M(n, v, c)
    r = b * (b - 1) / (c - 1)
    rhs = backward(forward(f))(b).scale(r) - (r + (b + X) * (b + n)) * forward(f)(b)
    return (X * M(n, b, c)).scale(n), rhs


def MnRF(n, k, th):
    b, c = _bc(th)
    lhs = pochhammer_poly(X + 1, k) * M(n, b + k, c)
    rhs = iterate(backward, k, lambda m: M(m, b, c))(n + k).scale(pochhammer(b, k) * c**k / (c - 1) ** k)
    return lhs, rhs


def MnRF_fixed(n, k, th):
    # the x-argument of M_(n+k) must be x+k, as rainM shifts x by one per step
    b, c = _bc(th)
    lhs = pochhammer_poly(X + 1, k) * M(n, b + k, c)
    rhs = iterate(backward, k, lambda m: M(m, b, c, k))(n + k).scale(pochhammer(b, k) * c**k / (c - 1) ** k)
    return lhs, rhs


def MnRF2(n, k, th):
    b, c = _bc(th)
    g = lambda m: M(m + k, b, c).scale((-c) ** (m + k))
    lhs = (pochhammer_poly(X + b, k) * M(n, b + k, c)).scale((1 - c) ** k * (-c) ** n)
    return lhs, iterate(forward, k, g)(n).scale(pochhammer(b, k))


def MnRF2_fixed(n, k, th):
    # nabla_n^k c^(n+k) M_(n+k) with prefactor (beta)_k / ((c-1)^k (x+beta)_k c^n)
    b, c = _bc(th)
    g = lambda m: ZERO if m < 0 else M(m, b, c).scale(c**m)
    lhs = (pochhammer_poly(X + b, k) * M(n, b + k, c)).scale((c - 1) ** k * c**n)
    return lhs, iterate(backward, k, g)(n + k).scale(pochhammer(b, k))


def MnRF2_step(n, k, th):
    b, c = _bc(th)
    lhs = forward(lambda m: M(m, b, c).scale((-c) ** m))(n)
    return lhs, ((X + b) * M(n - 1, b + 1, c)).scale((1 - c) * (-c) ** n / b)


def MbRF(n, k, th):
    b, c = _bc(th)
    f0 = lambda v: M(n + k, v, c, k)
    fk = ladder(f0, k, backward, lambda j, v: (v + j - 1) * (2 - j - v))
    lhs = (pochhammer_poly(X + 1, k) * M(n, b + k, c)).scale((c - 1) ** k * pochhammer(n + 1, k))
    return lhs, fk(b).scale(c**k)


def McRF(n, k, th):
    b, c = _bc(th)
    P = F_in_c(n + k, b)
    for _ in range(k):
        P = P.derivative().mul_linear(n + b + k, 1)
    lhs = (pochhammer_poly(X + b, k) * F(n, b + k, c)).scale(pochhammer(n + 1, k))
    return lhs, P.eval(c)


def McRF_fixed(n, k, th):
    b, c = _bc(th)
    P = F_in_c(n + k, b)
    for _ in range(k):
        P = P.derivative()
    lhs = (pochhammer_poly(X + b, k) * F(n, b + k, c)).scale(pochhammer(n + 1, k))
    return lhs, P.eval(c)


def _prop2_rhs(p: Poly, b, c) -> Poly:
    # nabla acts on x
    d1 = p.backward_diff()
    d2 = d1.backward_diff()
    d3 = d2.backward_diff()
    return ((Poly.linear(b * c + c, c - 1) * p) / c
            + (Poly.linear(2 * b * c**2 + 2 * c**2, 2 * c**2 - c - 1) * d1) / ((c - 1) * c)
            + (Poly.linear(-2 * b + 3 * b * c + 3 * c - 2, 3 * c - 3) * d2).scale(c / (c - 1) ** 2)
            + (Poly.linear(b + 1, 1) * d3).scale(c**2 / (c - 1) ** 2))


def prop2(n, k, th):
    b, c = _bc(th)
    return _prop2_rhs(M(n, b, c), b, c), M(n + 1, b + 1, c).scale((b + n) * (b + n + 1) / b)


register(
    simple("M.shiftrec", G, "Lemma 3.7 recurrence",
           "(x+b) p_n = a_n p_(n+1) - (a_n+g_n) p_n + g_n p_(n-1), p_n = c^n M_n(x;b,c)", "M", shift_rec),
    simple("M.shiftsode", G, "Lemma 3.7 second-order form",
           "(x+b) p_n = g_n nabla_n Delta_n p_n + (a_n-g_n) Delta_n p_n", "M", shift_sode),
    simple("M.rainM", G, "Lemma 3.8 (rainM)", "b c/(c-1) Delta_n M_n(x;b,c) = x M_n(x-1;b+1,c)", "M", rainM,
           extra_valid=_params_ok),
    simple("M.raiupnM", G, "Lemma 3.8 (raiupnM)",
           "M_n + c/(c-1) Delta_n M_n = (x+b)/b M_n(x;b+1,c)", "M", raiupnM, extra_valid=_params_ok),
    simple("M.raidonM", G, "Lemma 3.8 (raidonM)",
           "M_n + 1/(c-1) nabla_n M_n = (x+b)/b M_(n-1)(x;b+1,c)", "M", raidonM, extra_valid=_params_ok,
           erratum=Erratum("false at n = 0 under M_(-1) = 0 (the left side is c/(c-1)); holds for n >= 1",
                           raidonM, n_min=1)),
    simple("M.lowbM", G, "Lemma 3.8 (lowbM)",
           "c b(1-b)/(c-1) nabla_b M_n(x;b,c) = x n M_(n-1)(x-1;b+1,c)", "M", lowbM, extra_valid=_params_ok),
    simple("M.raiupbM", G, "Lemma 3.8 (raiupbM)",
           "b(b-1)c/((b+n)(c-1)) M_(n+1)(x+1;b-1,c) = (x+b+b(b-1)/((b+n)(c-1))) M_n + (x+b) Delta_b M_n",
           "M", raiupbM, extra_valid=_params_ok),
    simple("M.raidobM", G, "Lemma 3.8 (raidobM)",
           "(b-1)(b-2)c/((b-1+n)(c-1)) M_(n+1)(x+1;b-2,c) = (x+b-1+r) M_n - r nabla_b M_n, "
           "r = (b-1)(b-2)/((b-1+n)(c-1))", "M", raidobM, extra_valid=_params_ok),
    simple("M.lowcM", G, "Lemma 3.8 (lowcM)",
           "d/dc c^n (b)_n M_n(x;b,c) = n(x+b)/(c+n+b) c^n (b+1)_n M_(n-1)(x;b+1,c)", "M", lowcM,
           extra_valid=_params_ok,
           erratum=Erratum("the right side should be n(x+b) c^(n-1) (b+1)_(n-1) M_(n-1)(x;b+1,c): the "
                           "1/(c+n+b) factor is spurious and the powers are n-1, matching the "
                           "degree n-1 in c of the left side", lowcM_fixed)),
    simple("M.raidcM", G, "Lemma 3.8 (raidcM)",
           "c(1-b) c^n (b)_n b M_(n+1)(x;b-1,c) = c(1-c) d/dc c^n (b)_n M_n - ((c-1)x+n-(n+1)c+cb) c^n (b)_n b M_n",
           "M", raidcM, extra_valid=_params_ok,
           erratum=Erratum("holds once the factor b is removed from both the left side and the last "
                           "term (equivalently, the d/dc term lacks a factor b)", raidcM_fixed)),
    simple("M.sodeM", G, "Theorem 3.6 proof (sodeM)",
           "n x M_n = b(b-1)/(c-1) nabla_b Delta_b M_n - (b(b-1)/(c-1) + (b+x)(b+n)) Delta_b M_n",
           "M", sodeM, kind="sode"),
    simple("M.MnRF", G, "Meixner Rodrigues theorem (MnRF)",
           "M_n(x;b+k,c) = (b)_k c^k/((c-1)^k (x+1)_k) nabla_n^k M_(n+k)(x;b,c)", "M", MnRF,
           kind="rodrigues", uses_k=True,
           erratum=Erratum("each rainM step shifts x by one, so the ladder acts on M_(n+k)(x+k;b,c)",
                           MnRF_fixed)),
    simple("M.MnRF2", G, "Meixner Rodrigues theorem (MnRF2)",
           "M_n(x;b+k,c) = (b)_k/((1-c)^k (x+b)_k (-c)^n) Delta_n^k (-c)^(n+k) M_(n+k)(x;b,c)", "M", MnRF2,
           kind="rodrigues", uses_k=True, step=MnRF2_step,
           erratum=Erratum("the valid ladder is M_n(x;b+k,c) = (b)_k/((c-1)^k (x+b)_k c^n) nabla_n^k "
                           "c^(n+k) M_(n+k)(x;b,c), iterating nabla_n c^n M_n = (c-1)(x+b)/b c^(n-1) "
                           "M_(n-1)(x;b+1,c); the printed single step fails as well", MnRF2_fixed)),
    simple("M.MbRF", G, "Meixner Rodrigues theorem (MbRF)",
           "M_n(x;b+k,c) = c^k (b+k-1)(2-k-b)/((c-1)^k (x+1)_k (n+1)_k) nabla_b ... b(1-b) nabla_b M_(n+k)(x+k;b,c)",
           "M", MbRF, kind="rodrigues", uses_k=True),
    simple("M.McRF", G, "Meixner Rodrigues theorem (c-derivative ladder)",
           "c^n (b+k)_n M_n(x;b+k,c) = (c+n+b+k)/((n+1)_k (x+b)_k) d/dc ... (c+n+b+k) d/dc c^(n+k) (b)_(n+k) M_(n+k)",
           "M", McRF, kind="rodrigues", uses_k=True,
           erratum=Erratum("with lowcM corrected the ladder has no (c+n+b+k) factors: "
                           "c^n (b+k)_n M_n(x;b+k,c) = 1/((n+1)_k (x+b)_k) d^k/dc^k c^(n+k) (b)_(n+k) M_(n+k)",
                           McRF_fixed)),
    simple("M.prop2", G, "Proposition 2",
           "third-order nabla relation giving (b+n)(b+n+1)/b M_(n+1)(x;b+1,c)", "M", prop2, kind="proposition",
           erratum=Erratum("nabla read in x, the only reading that passes anywhere: holds for n <= 2 and "
                           "fails for every n >= 3 (also with nabla_n or nabla_b); no third-order nabla_x "
                           "operator with coefficients linear in x maps M_n(x;b,c) to "
                           "(b+n)(b+n+1)/b M_(n+1)(x+s;b+1,c) for s in {-1,0,1} over n <= 6, so no "
                           "correction is offered")),
)
