"""Checks behind the Laguerre-constellation characterization: the constant
sum of recurrence coefficients, the structure relation in n and its two
Sturm-Liouville rewrites, and the parameter second-order equations."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .arith import format_rational
from .families import FamilyId, InvalidParameter, ParamPoint, check_params, family_poly, get_family, norm_ratio
from .poly import X, ZERO, Poly


class NoPearsonPolynomial(ValueError):
    """The family has no registered degree-one phi or phi*."""


@dataclass
class CheckReport:
    check: str
    family: str
    theta: dict[str, str]
    ok: bool
    detail: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def to_json(self) -> dict:
        return {"check": self.check, "family": self.family, "theta": self.theta,
                "status": self.status, **self.detail}


GammaOverride = Callable[[int, ParamPoint], Fraction]


def check_lc_membership(fam, th: ParamPoint, n_max: int = 20, branch: str | None = None,
                        gamma: GammaOverride | None = None) -> CheckReport:
    """gamma_0 = 0 and alpha_n + beta_n + gamma_n constant over 0..n_max.

    ``gamma`` replaces the branch's gamma_n (beta_n is kept), which builds the
    perturbed pseudo-family used as a negative control.  Where the branch has
    a Pearson polynomial the constant must also be its root.
    """
    spec = get_family(fam)
    check_params(spec, th)
    br = spec.branch(branch)
    g = gamma or br.gamma
    sums = [br.alpha(n, th) + br.beta(n, th) + g(n, th) for n in range(n_max + 1)]
    detail: dict = {"branch": br.label, "n_max": n_max, "constant": format_rational(sums[0])}
    ok = True
    if g(0, th) != 0:
        ok = False
        detail["first_failure"] = {"n": 0, "reason": "gamma_0 != 0"}
    else:
        for n, s in enumerate(sums):
            if s != sums[0]:
                ok = False
                detail["first_failure"] = {"n": n, "reason": f"sum {format_rational(s)} != {format_rational(sums[0])}"}
                break
    if br.pearson is not None:
        root = br.root(th)
        detail["root"] = format_rational(root)
        root_ok = br.pearson(th).eval(root) == 0 and sums[0] == root
        detail["root_ok"] = root_ok
        ok = ok and root_ok
    return CheckReport("lc_membership", spec.id.value, th.to_json(), ok, detail)


def _require_pearson(fam, branch):
    spec = get_family(fam)
    br = spec.branch(branch)
    if br.pearson is None:
        raise NoPearsonPolynomial(f"{spec.id}: no degree-one phi/phi* registered")
    return spec, br


def _p(fam, th, br):
    return lambda m: family_poly(fam, m, th, normalized=True, branch=br.label) if m >= 0 else ZERO


def _phi_monic(br, th) -> Poly:
    # phi(x) = x - c, c the root of the registered Pearson polynomial
    return X - br.root(th)


def structure_relation_sides(fam, n: int, th: ParamPoint, branch: str | None = None) -> tuple[Poly, Poly]:
    """(x - c) p_n = alpha_n Delta_n p_n - gamma_n Delta_n p_(n-1)."""
    spec, br = _require_pearson(fam, branch)
    check_params(spec, th)
    p = _p(fam, th, br)
    lhs = _phi_monic(br, th) * p(n)
    rhs = (p(n + 1) - p(n)).scale(br.alpha(n, th)) - (p(n) - p(n - 1)).scale(br.gamma(n, th))
    return lhs, rhs


def sturm_liouville_sides(fam, n: int, th: ParamPoint, form: str, branch: str | None = None,
                          printed: bool = False) -> tuple[Poly, Poly]:
    """Ratio-only Sturm-Liouville forms, every d_n^2 rewritten through
    rho_n = d_n^2/d_(n-1)^2 = gamma_n/alpha_(n-1).

    SL1: d_n^2 nabla_n (w_n/d_n^2) Delta_n p_n
         = w_n Delta p_n - rho_n w_(n-1) Delta p_(n-1)
    SL2: d_n^2 Delta_n (v_n/d_n^2) nabla_n p_n
         = (v_(n+1)/rho_(n+1)) Delta p_n - v_n nabla p_n
    The forms that hold have w = alpha and v = gamma; ``printed`` swaps them.
    Under p_(-1) = 0 the n-1 term of SL1 vanishes at n = 0.
    """
    spec, br = _require_pearson(fam, branch)
    check_params(spec, th)
    p = _p(fam, th, br)
    al = lambda m: br.alpha(m, th)
    ga = lambda m: br.gamma(m, th)
    if form.upper() == "SL1":
        w = ga if printed else al
        rhs = (p(n + 1) - p(n)).scale(w(n))
        if n >= 1:
            rhs = rhs - (p(n) - p(n - 1)).scale(norm_ratio(fam, n, th, br.label) * w(n - 1))
    elif form.upper() == "SL2":
        v = al if printed else ga
        rhs = ((p(n + 1) - p(n)).scale(v(n + 1) / norm_ratio(fam, n + 1, th, br.label))
               - (p(n) - p(n - 1)).scale(v(n)))
    else:
        raise ValueError(f"unknown Sturm-Liouville form {form!r}; expected SL1 or SL2")
    return _phi_monic(br, th) * p(n), rhs


def _report(check, fam, th, lhs, rhs, **detail) -> CheckReport:
    ok = lhs == rhs
    if not ok:
        detail["residual_poly"] = (lhs - rhs).to_json()
    return CheckReport(check, FamilyId.parse(fam).value, th.to_json(), ok, detail)


def check_structure_relation(fam, n: int, th: ParamPoint, branch: str | None = None) -> CheckReport:
    lhs, rhs = structure_relation_sides(fam, n, th, branch)
    return _report("structure_relation", fam, th, lhs, rhs, n=n, branch=get_family(fam).branch(branch).label)


def check_sturm_liouville(fam, n: int, th: ParamPoint, form: str, branch: str | None = None,
                          printed: bool = False) -> CheckReport:
    lhs, rhs = sturm_liouville_sides(fam, n, th, form, branch, printed)
    return _report("sturm_liouville", fam, th, lhs, rhs, n=n, form=form.upper(), printed=printed,
                   branch=get_family(fam).branch(branch).label)


PARAMETER_SODES = {
    "sodeL1": "L.sodeL1", "sodeL2": "L.sodeL2", "sodeM": "M.sodeM",
    "sodeM1": "bqL.sodeM1", "sodeM2": "bqL.sodeM2",
    "sodelqL1": "lqL.sodelqL1", "sodelqL2": "lqL.sodelqL2",
}


def check_parameter_sode(name: str, n: int, th: ParamPoint) -> CheckReport:
    """One parameter second-order equation at one point, as printed and, where
    an erratum exists, in its corrected reading."""
    from .engine import get_identity

    key = PARAMETER_SODES.get(name, name)
    ident = get_identity(key)
    variant = ident.variants[0]
    check_params(get_family(variant.family), th)
    lhs, rhs = variant.sides(n, 0, th)
    detail: dict = {"identity": ident.key, "n": n, "printed": "pass" if lhs == rhs else "fail"}
    ok = lhs == rhs
    if not ok:
        detail["residual_poly"] = (lhs - rhs).to_json()
    if ident.erratum is not None and ident.erratum.has_correction:
        cl, cr = ident.erratum.sides_for(variant)(n, 0, th)
        detail["corrected"] = "pass" if cl == cr else "fail"
        detail["erratum"] = ident.erratum.note
    return CheckReport("parameter_sode", variant.family.value, th.to_json(), ok, detail)


def pearson_branches() -> list[tuple[FamilyId, str]]:
    """(family, branch) pairs with a registered degree-one Pearson polynomial."""
    out = []
    for fam in FamilyId:
        for br in get_family(fam).branches:
            if br.pearson is not None:
                out.append((fam, br.label))
    return out


def lc_equivalence(fam, th: ParamPoint, n_max: int = 10, branch: str | None = None) -> dict:
    """Run the three equivalent statements and report whether they agree."""
    lc = check_lc_membership(fam, th, 20, branch).ok
    sr = sl1 = sl2 = True
    for n in range(n_max + 1):
        try:
            sr = sr and check_structure_relation(fam, n, th, branch).ok
            sl1 = sl1 and check_sturm_liouville(fam, n, th, "SL1", branch).ok
            sl2 = sl2 and check_sturm_liouville(fam, n, th, "SL2", branch).ok
        except InvalidParameter:
            continue
    return {"lc_membership": lc, "structure_relation": sr, "SL1": sl1, "SL2": sl2,
            "equivalent": lc == sr == sl1 == sl2}
