"""Big q-Laguerre identities: index and parameter ladders (Hahn operators in
a), the a-difference equations, Rodrigues forms and the fourth-order
q-derivative relation."""

from __future__ import annotations

from fractions import Fraction

from ..arith import binom2, qpochhammer
from ..engine import Erratum, register, simple
from ..families import FamilyId, ParamPoint, family_poly, recurrence_coeffs
from ..operators import backward, forward, iterate, ladder, qdiff
from ..poly import X, ZERO, Poly, qpochhammer_poly

G = "bqL"


def P(n: int, a, b, q, scale_x=1) -> Poly:
    """p_n(scale_x * x; a, b; q)."""
    if n < 0:
        return ZERO
    return family_poly(FamilyId.bqL, n, ParamPoint(a=a, b=b, q=q)).subst_affine(scale_x)


def _abq(th):
    return th["a"], th["b"], th["q"]


def _phi1(a, b, q):
    return (1 - a * q) * (1 - b * q)


def rainbqL(n, k, th):
    a, b, q = _abq(th)
    lhs = forward(lambda m: P(m, a, b, q))(n).scale(_phi1(a, b, q) * q**n)
    return lhs, (X - 1) * P(n, a * q, b * q, q, q)


def raiupnbqL(n, k, th):
    a, b, q = _abq(th)
    al, _, _ = recurrence_coeffs(FamilyId.bqL, n, th)
    lhs = P(n + 1, a / q, b / q, q, 1 / q).scale((a - 1) * (b - 1) * q ** (n + 1))
    qn1 = q ** (n + 1)
    rhs = P(n, a, b, q).scale(a * b * qn1 - a * qn1 - b * qn1 + 1) + forward(lambda m: P(m, a, b, q))(n).scale(al)
    return lhs, rhs


def raidonbqL(n, k, th):
    a, b, q = _abq(th)
    _, _, ga = recurrence_coeffs(FamilyId.bqL, n, th)
    lhs = P(n, a / q, b / q, q, 1 / q).scale((a - 1) * (b - 1) * q ** (n + 1))
    qn = q**n
    rhs = (P(n, a, b, q).scale(q * (a * b * qn - a * qn - b * qn + 1))
           + backward(lambda m: P(m, a, b, q))(n).scale(qn * ga))
    return lhs, rhs


def raidonbqL_fixed(n, k, th):
    a, b, q = _abq(th)
    _, _, ga = recurrence_coeffs(FamilyId.bqL, n, th)
    lhs = P(n, a / q, b / q, q, 1 / q).scale((a - 1) * (b - 1) * q ** (n + 1))
    qn = q**n
    rhs = (P(n, a, b, q).scale(q * (a * b * qn - a * qn - b * qn + 1))
           + backward(lambda m: P(m, a, b, q))(n).scale(ga))
    return lhs, rhs


# Plain differences on the q-lattice in a (no a(q-1) denominator); these are
# the operators under which the a-ladders below verify.


def _up(f, q):
    """f(qa) - f(a)."""
    return lambda v: f(q * v) - f(v)


def _down(f, q):
    """f(a) - f(a/q)."""
    return lambda v: f(v) - f(v / q)


def _Dq_a(n, b, q, inverse=False):
    f = lambda v: P(n, v, b, q)
    return qdiff(f, 1 / q if inverse else q)


def lowabqL(n, k, th):
    a, b, q = _abq(th)
    lhs = _Dq_a(n, b, q)(a).scale((a - 1) * _phi1(a, b, q))
    rhs = ((X - 1) * P(n - 1, a * q, b * q, q, q)).scale(a * (1 - q**n) / q ** (n - 1))
    return lhs, rhs


def raiupbbqL(n, k, th):
    a, b, q = _abq(th)
    qn1 = q ** (n + 1)
    lhs = P(n, a / q, b, q).scale((a - 1) * b * qn1 * (a * q - 1))
    t = (X - a * q).scale(a * qn1 - 1)
    rhs = t * _Dq_a(n, b, q)(a) + ((X - (a - b + a * b) * qn1).scale(1 - a * q) + t) * P(n, a, b, q)
    return lhs, rhs


def raidobbqL(n, k, th):
    a, b, q = _abq(th)
    qn1 = q ** (n + 1)
    lhs = P(n + 1, a / q, b, q).scale((a - 1) * (a * q - 1) * (b * qn1 - 1))
    rhs = (_Dq_a(n, b, q, inverse=True)(a).scale((1 - a) * b * (a * q - 1) * qn1)
           + (X + a * b * qn1 - a - b * qn1).scale(a * q - 1) * P(n, a, b, q))
    return lhs, rhs


def lowabqL_fixed(n, k, th):
    a, b, q = _abq(th)
    lhs = _down(lambda v: P(n, v, b, q), q)(a).scale((a - 1) * _phi1(a, b, q))
    rhs = ((X - 1) * P(n - 1, a * q, b * q, q, q)).scale(a * (1 - q**n) / q ** (n - 1))
    return lhs, rhs


def raiupbbqL_fixed(n, k, th):
    a, b, q = _abq(th)
    qn1 = q ** (n + 1)
    lhs = P(n, a / q, b, q).scale((a - 1) * b * qn1 * (a * q - 1))
    t = (X - a * q).scale(a * qn1 - 1)
    rhs = (t * _up(lambda v: P(n, v, b, q), q)(a)
           + ((X - (a - b + a * b) * qn1).scale(1 - a * q) + t) * P(n, a, b, q))
    return lhs, rhs


def raidobbqL_fixed(n, k, th):
    a, b, q = _abq(th)
    qn1 = q ** (n + 1)
    lhs = P(n + 1, a / q, b, q).scale((a - 1) * (a * q - 1) * (b * qn1 - 1))
    rhs = (_down(lambda v: P(n, v, b, q), q)(a).scale((1 - a) * b * (a * q - 1) * qn1)
           + (X + a * b * qn1 - a - b * qn1).scale(a * q - 1) * P(n, a, b, q))
    return lhs, rhs


def _t(n, a, b, q):
    return (X - a * q).scale(a * q ** (n + 1) - 1), (a - 1) * b * q ** (n + 1) * (a * q - 1)


def sodeM1(n, k, th):
    a, b, q = _abq(th)
    t, ts = _t(n, a, b, q)
    f = lambda v: P(n, v, b, q)
    Dq, Dqi = (lambda g: qdiff(g, q)), (lambda g: qdiff(g, 1 / q))
    rhs = t * Dqi(Dq(f))(a) - (t - ts) * Dq(f)(a)
    return ((X - 1) * P(n, a, b, q)).scale(a * (1 - q**n)), rhs


def sodeM2(n, k, th):
    a, b, q = _abq(th)
    t, ts = _t(n, a, b, q)
    f = lambda v: P(n, v, b, q)
    Dq, Dqi = (lambda g: qdiff(g, q)), (lambda g: qdiff(g, 1 / q))
    rhs = Dq(Dqi(f))(a).scale(ts) - (t - ts) * Dqi(f)(a)
    return ((X - 1) * P(n, a, b, q)).scale(a * (1 - q**n)), rhs


def _sode_fixed(n, th, form):
    # a q (1-q^n)(x-1) p_n = t_n Delta p_n + t*_n nabla p_n  (plain lattice differences)
    a, b, q = _abq(th)
    t, ts = _t(n, a, b, q)
    f = lambda v: P(n, v, b, q)
    up, down = _up(f, q)(a), _down(f, q)(a)
    second = _down(_up(f, q), q)(a)  # Delta(a) - Delta(a/q)
    if form == 1:
        rhs = t * second + (t + ts) * down
    else:
        rhs = (t + ts) * up - second.scale(ts)
    return ((X - 1) * P(n, a, b, q)).scale(a * q * (1 - q**n)), rhs


def sodeM1_fixed(n, k, th):
    return _sode_fixed(n, th, 1)


def sodeM2_fixed(n, k, th):
    return _sode_fixed(n, th, 2)


def bqLnRF(n, k, th):
    a, b, q = _abq(th)
    lhs = qpochhammer_poly(X, q, k) * P(n, a * q**k, b * q**k, q, q**k)
    rhs = iterate(backward, k, lambda m: P(m, a, b, q))(n + k)
    return lhs, rhs.scale(qpochhammer(a * q, q, k) * qpochhammer(b * q, q, k))


def bqLnRF_fixed(n, k, th):
    # iterate rainbqL with the q^n factor kept inside the ladder:
    # (q^n Delta_n)^k p_n = (-1)^k (x;q)_k / (aq,bq;q)_k p_n(q^k x; aq^k, bq^k)
    a, b, q = _abq(th)
    f = lambda m: P(m, a, b, q)
    for _ in range(k):
        f = (lambda g: (lambda m: (g(m + 1) - g(m)).scale(q**m)))(f)
    lhs = qpochhammer_poly(X, q, k) * P(n, a * q**k, b * q**k, q, q**k)
    return lhs, f(n).scale((-1) ** k * qpochhammer(a * q, q, k) * qpochhammer(b * q, q, k))


def _bqLaRF(n, k, th, op):
    a, b, q = _abq(th)
    f0 = lambda v: P(n + k, v, b, q)
    fk = ladder(f0, k, op, lambda j, v: (v * q ** (j - 1) - 1) * (1 - v * q**j) / (v * q**j))
    lhs = (qpochhammer_poly(X, q, k) * P(n, a * q**k, b * q**k, q, q**k)).scale(qpochhammer(q ** (n + 1), q, k))
    return lhs, fk(a).scale(q ** (n * k) * q ** binom2(k + 1) * qpochhammer(b * q, q, k))


def bqLaRF_fixed(n, k, th):
    q = th["q"]
    return _bqLaRF(n, k, th, lambda g: (lambda v: g(v / q) - g(v)))


def bqLaRF(n, k, th):
    q = th["q"]
    return _bqLaRF(n, k, th, lambda g: qdiff(g, q))


# fourth-order relation, prefactor symbols c, beta read as a, b


def _prop3_coeffs(a, b, q):
    u = q**4 * X - 1
    A, B = (a * q**2 - 1), (b * q**2 - 1)
    p0 = (u.scale(a + b + a * q + b * q + a * b * q) + (a + b) * (1 + q) * A * B) / q
    p1 = (u.scale(a * b + a**2 * q + 2 * a * b * q + a**2 * b * q + b**2 * q + a * b**2 * q
                  + a * b * q**2 + a**2 * b * q**2 + a * b**2 * q**2)
          + A * B * (a * b + a**2 * q + 2 * a * b * q + b**2 * q + a * b * q**2)).scale((q - 1) / q**2)
    p2 = (u.scale(a + b + a * b + a * q + a**2 * q + b * q + 2 * a * b * q + b**2 * q + a * b * q**2)
          + (a + b) * (1 + q) * A * B).scale(a * b * (q - 1) ** 2 / q**2)
    p3 = (u.scale(1 + a + b + a * q + b * q) + A * B).scale(a**2 * b**2 * (q - 1) ** 3 / q**2)
    p4 = u.scale(a**3 * b**3 * (q - 1) ** 4 / q**2)
    return p0, p1, p2, p3, p4


def prop3(n, k, th):
    a, b, q = _abq(th)
    coeffs = _prop3_coeffs(a, b, q)
    p = P(n, a, b, q)
    rhs = ZERO
    for c in coeffs:
        rhs = rhs + c * p
        p = p.q_derivative(q)
    pre = ((a * q ** (n + 1) - 1) * (a * q ** (n + 2) - 1) * (b * q ** (n + 1) - 1) * (b * q ** (n + 2) - 1)
           / (q ** (4 * n) * (a * q - 1) * (b * q - 1)))
    return P(n + 1, a * q, b * q, q, q**4).scale(pre), rhs


register(
    simple("bqL.rainbqL", G, "Lemma 4.5 (rainbqL)",
           "phi(1) q^n Delta_n p_n(x;a,b;q) = (x-1) p_n(xq;aq,bq;q)", "bqL", rainbqL),
    simple("bqL.raiupnbqL", G, "Lemma 4.5 (raiupnbqL)",
           "(a-1)(b-1)q^(n+1) p_(n+1)(x/q;a/q,b/q;q) = (abq^(n+1)-aq^(n+1)-bq^(n+1)+1) p_n + alpha_n Delta_n p_n",
           "bqL", raiupnbqL),
    simple("bqL.raidonbqL", G, "Lemma 4.5 (raidonbqL)",
           "(a-1)(b-1)q^(n+1) p_n(x/q;a/q,b/q;q) = q(abq^n-aq^n-bq^n+1) p_n + q^n gamma_n nabla_n p_n",
           "bqL", raidonbqL,
           erratum=Erratum("the q^n in front of gamma_n is spurious: the coefficient of nabla_n p_n is "
                           "gamma_n", raidonbqL_fixed)),
    simple("bqL.lowabqL", G, "Lemma 4.5 (lowabqL)",
           "(a-1) phi(1) D_(q,a) p_n(x;a,b;q) = a(1-q^n)/q^(n-1) (x-1) p_(n-1)(xq;aq,bq;q)", "bqL", lowabqL,
           erratum=Erratum("under the displayed Hahn operator D_(q,a) this fails for every n >= 1; it holds with D_(q,a) p_n replaced by the plain "
                           "lattice difference p_n(x;a,b;q) - p_n(x;a/q,b;q)", lowabqL_fixed)),
    simple("bqL.raiupbbqL", G, "Lemma 4.5 (raiupbbqL)",
           "(a-1)bq^(n+1)(aq-1) p_n(x;a/q,b;q) = (aq^(n+1)-1)(x-aq) D_(q,a) p_n "
           "+ ((1-aq)(x-(a-b+ab)q^(n+1)) + (aq^(n+1)-1)(x-aq)) p_n", "bqL", raiupbbqL,
           erratum=Erratum("under the displayed Hahn operator D_(q,a) this fails for every n >= 1; it holds with D_(q,a) p_n replaced by the plain "
                           "lattice difference p_n(x;aq,b;q) - p_n(x;a,b;q)", raiupbbqL_fixed)),
    simple("bqL.raidobbqL", G, "Lemma 4.5 (raidobbqL)",
           "(a-1)(aq-1)(bq^(n+1)-1) p_(n+1)(x;a/q,b;q) = (1-a)b(aq-1)q^(n+1) D_(1/q,a) p_n "
           "+ (aq-1)(x+abq^(n+1)-a-bq^(n+1)) p_n", "bqL", raidobbqL,
           erratum=Erratum("under the displayed D_(1/q,a) this fails for every n >= 1; it holds with "
                           "D_(1/q,a) p_n replaced by p_n(x;a,b;q) - p_n(x;a/q,b;q)", raidobbqL_fixed)),
    simple("bqL.sodeM1", G, "Theorem 4.6 proof (sodeM1)",
           "(x-1)a(1-q^n) p_n = t_n D_(1/q,a) D_(q,a) p_n - (t_n - t*_n) D_(q,a) p_n", "bqL", sodeM1, kind="sode",
           erratum=Erratum("fails for every n >= 1 under any choice of Hahn or plain lattice operators; "
                           "eliminating between the corrected a-ladders gives "
                           "a q(1-q^n)(x-1) p_n = t_n nabla Delta p_n + (t_n + t*_n) nabla p_n with "
                           "Delta f = f(qa) - f(a), nabla f = f(a) - f(a/q)", sodeM1_fixed)),
    simple("bqL.sodeM2", G, "Theorem 4.6 proof (sodeM2)",
           "(x-1)a(1-q^n) p_n = t*_n D_(q,a) D_(1/q,a) p_n - (t_n - t*_n) D_(1/q,a) p_n", "bqL", sodeM2,
           kind="sode",
           erratum=Erratum("fails for every n >= 1 (see sodeM1); the companion corrected form is "
                           "a q(1-q^n)(x-1) p_n = -t*_n nabla Delta p_n + (t_n + t*_n) Delta p_n",
                           sodeM2_fixed)),
    simple("bqL.bqLnRF", G, "big q-Laguerre Rodrigues theorem (bqLnRF)",
           "p_n(q^k x;aq^k,bq^k;q) = (aq,bq;q)_k/(x;q)_k nabla_n^k p_(n+k)(x;a,b;q)", "bqL", bqLnRF,
           kind="rodrigues", uses_k=True,
           erratum=Erratum("rainbqL carries q^n, which does not commute with Delta_n; iterating it gives "
                           "p_n(q^k x;aq^k,bq^k;q) = (-1)^k (aq,bq;q)_k/(x;q)_k (q^n Delta_n)^k p_n(x;a,b;q)",
                           bqLnRF_fixed)),
    simple("bqL.bqLaRF", G, "big q-Laguerre Rodrigues theorem (bqLaRF)",
           "p_n(q^k x;aq^k,bq^k;q) = q^(nk) q^binom(k+1,2) (bq;q)_k/(q^(n+1),x;q)_k "
           "w_k D_(q,a) ... w_1 D_(q,a) p_(n+k), w_j = (aq^(j-1)-1)(1-aq^j)/(aq^j)",
           "bqL", bqLaRF, kind="rodrigues", uses_k=True,
           erratum=Erratum("fails under the displayed D_(q,a); the ladder with the stated weights holds "
                           "when each D_(q,a) is the plain lattice difference f(a/q) - f(a)",
                           bqLaRF_fixed)),
    simple("bqL.prop3", G, "Proposition 3",
           "(aq^(n+1)-1)(aq^(n+2)-1)(bq^(n+1)-1)(bq^(n+2)-1)/(q^(4n)(aq-1)(bq-1)) p_(n+1)(q^4 x;aq,bq;q) "
           "= sum_(k=0..4) p_k(x) D_q^k p_n(x;a,b;q), with c, beta in the prefactor read as a, b",
           "bqL", prop3, kind="proposition",
           erratum=Erratum("c and beta do not occur among the family's parameters, so only the a, b "
                           "reading can be evaluated; it fails already at n = 0, where the right side "
                           "is p_0(x) alone and p_0(x) is not proportional to p_1(q^4 x;aq,bq;q), so "
                           "no rescaling of the prefactor repairs it; no correction is offered")),
)
