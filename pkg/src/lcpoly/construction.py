"""Independent constructions of p_n, for cross-checking the series generator.

* series: the hypergeometric generator (normalized at the branch root);
* recurrence: the three-term recurrence run forward from p_0 = 1;
* rodrigues: a k = 1 Rodrigues step applied to neighbouring members,
  divided out exactly (only where the family has an n-ladder).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .families import FamilyId, ParamPoint, check_params, family_poly, get_family
from .poly import ONE, X, Poly


def by_series(fam, n: int, th: ParamPoint, branch: str | None = None) -> Poly:
    return family_poly(fam, n, th, normalized=True, branch=branch)


def by_recurrence(fam, n: int, th: ParamPoint, branch: str | None = None) -> Poly:
    spec = get_family(fam)
    check_params(spec, th)
    br = spec.branch(branch)
    prev, cur = Poly(), ONE
    for m in range(n):
        nxt = ((X - br.beta(m, th)) * cur - prev.scale(br.gamma(m, th))) / br.alpha(m, th)
        prev, cur = cur, nxt
    return cur


def _L(n, th):
    from .arith import factorial
    from .identities.laguerre import LnRF

    _, rhs = LnRF(n, 1, th.replace(alpha=th["alpha"] - 1))
    return rhs.exact_div(X) / factorial(n)


def _C(n, th):
    from .identities.charlier import CnRF

    _, rhs = CnRF(n, 1, th)
    return rhs.exact_div(X + 1)


def _M(n, th):
    from .identities.meixner import MbRF

    b, c = th["beta"], th["c"]
    _, rhs = MbRF(n, 1, th.replace(beta=b - 1))
    return rhs.exact_div(X + 1) / ((c - 1) * (n + 1))


def _bqL(n, th):
    from .identities.bigq import bqLnRF_fixed

    a, b, q = th["a"], th["b"], th["q"]
    _, rhs = bqLnRF_fixed(n, 1, th.replace(a=a / q, b=b / q))
    return rhs.exact_div(1 - X).subst_affine(1 / q)  # p_n(qx) -> p_n(x)


def _SW(n, th):
    from .identities.sw import SWnRF2_fixed

    return SWnRF2_fixed(n, 1, th)[1]


_RODRIGUES: dict[FamilyId, Callable[[int, ParamPoint], Poly]] = {
    FamilyId.L: _L, FamilyId.C: _C, FamilyId.M: _M, FamilyId.bqL: _bqL, FamilyId.SW: _SW,
}


def has_rodrigues(fam) -> bool:
    return FamilyId.parse(fam) in _RODRIGUES


def by_rodrigues(fam, n: int, th: ParamPoint) -> Poly | None:
    """Unnormalized p_n from a one-step Rodrigues identity, or None."""
    f = _RODRIGUES.get(FamilyId.parse(fam))
    if f is None:
        return None
    check_params(get_family(fam), th)
    return f(n, th)


def cross_check(fam, n: int, th: ParamPoint, branch: str | None = None) -> dict:
    """Compare the constructions; the Rodrigues one is compared unnormalized."""
    series = by_series(fam, n, th, branch)
    out: dict = {"series_vs_recurrence": series == by_recurrence(fam, n, th, branch)}
    rod = by_rodrigues(fam, n, th)
    if rod is not None:
        out["series_vs_rodrigues"] = rod == family_poly(fam, n, th)
    return out


def norm_column_check(fam, n: int, th: ParamPoint, branch: str | None = None) -> tuple[Fraction, Fraction] | None:
    """(gamma_n/alpha_(n-1), printed d_n^2/d_(n-1)^2), or None without a printed column."""
    from .families import norm_ratio

    br = get_family(fam).branch(branch)
    if br.norm_sq_ratio is None:
        return None
    return norm_ratio(fam, n, th, br.label), br.norm_sq_ratio(n, th)
