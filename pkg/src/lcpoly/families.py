"""Registry of the ten families whose Pearson polynomial (or its starred
companion) has degree one.

Each family carries its series generator, the three-term recurrence data of
the root-normalized sequence, the Pearson polynomials where known, and a
validity predicate that rejects parameter points hitting a pole.

q-Meixner and q-Charlier live in the variable y = q^-x; every check works in
Q[y].  The q-Laguerre parameter q^alpha is carried as an independent rational
``t`` so that nothing irrational is ever needed.
"""

from __future__ import annotations

from functools import lru_cache

import random
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterator

from .arith import RationalLike, factorial, format_rational, pochhammer, qfactorial, qpochhammer, rat
from .hyperseries import hyper, hyper_sum, qhyper
from .poly import ONE, X, ZERO, Poly

#: Pole checks for q-families look at q^k for k up to this bound.
POLE_RANGE = 26


class InvalidParameter(ValueError):
    """Parameter point in a family's pole set, or missing/unknown symbols."""


class UnknownFamily(KeyError):
    pass


class FamilyId(str, Enum):
    L = "L"
    C = "C"
    M = "M"
    bqL = "bqL"
    qM = "qM"
    lqL = "lqL"
    qL = "qL"
    qC = "qC"
    ZLB = "0LB"
    SW = "SW"

    @classmethod
    def parse(cls, name) -> "FamilyId":
        if isinstance(name, cls):
            return name
        key = str(name)
        if key == "ZLB":
            return cls.ZLB
        try:
            return cls(key)
        except ValueError:
            raise UnknownFamily(name) from None

    def __str__(self) -> str:
        return self.value


class ParamPoint(Mapping):
    """Immutable symbol -> Fraction assignment."""

    __slots__ = ("_items",)

    def __init__(self, values: Mapping[str, RationalLike] | None = None, **kw: RationalLike):
        merged = dict(values or {})
        merged.update(kw)
        self._items = tuple(sorted((k, rat(v)) for k, v in merged.items()))

    def __getitem__(self, key: str) -> Fraction:
        for k, v in self._items:
            if k == key:
                return v
        raise KeyError(key)

    def __iter__(self) -> Iterator[str]:
        return (k for k, _ in self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __hash__(self) -> int:
        return hash(self._items)

    def __eq__(self, other) -> bool:
        if isinstance(other, ParamPoint):
            return self._items == other._items
        return NotImplemented

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}={format_rational(v)}" for k, v in self._items)
        return f"ParamPoint({inner})"

    def replace(self, **kw: RationalLike) -> "ParamPoint":
        d = dict(self._items)
        d.update({k: rat(v) for k, v in kw.items()})
        return ParamPoint(d)

    def to_json(self) -> dict[str, str]:
        return {k: format_rational(v) for k, v in self._items}


Scalar = Callable[[int, ParamPoint], Fraction]


@dataclass(frozen=True)
class Branch:
    """One root-normalized sequence together with the recurrence it obeys.

    ``pearson`` is the degree-one Pearson polynomial (phi or phi*) vanishing
    at ``root``; it is None for the families whose Pearson data is not
    registered, in which case ``root`` is the constant alpha_n+beta_n+gamma_n.
    """

    label: str
    root: Callable[[ParamPoint], Fraction]
    value_at_root: Scalar
    alpha: Scalar
    beta: Scalar
    gamma: Scalar
    table_row: tuple[str, str, str, str]
    pearson: Callable[[ParamPoint], Poly] | None = None
    pearson_kind: str | None = None
    norm_sq_ratio: Scalar | None = None  # d_n^2/d_(n-1)^2 read off the printed d_n^2 column


@dataclass(frozen=True)
class FamilySpec:
    id: FamilyId
    name: str
    parameters: tuple[str, ...]
    variable: str
    generator: Callable[[int, ParamPoint], Poly]
    branches: tuple[Branch, ...]
    validity: Callable[[ParamPoint], str | None]
    phi: Callable[[ParamPoint], Poly] | None = None
    phi_star: Callable[[ParamPoint], Poly] | None = None
    psi: Callable[[ParamPoint], Poly] | None = None
    psi_star: Callable[[ParamPoint], Poly] | None = None
    sampler: Callable[[random.Random, int], dict[str, Fraction]] | None = None

    @property
    def main(self) -> Branch:
        return self.branches[0]

    def branch(self, label: str | None = None) -> Branch:
        if label is None:
            return self.main
        for b in self.branches:
            if b.label == label:
                return b
        raise KeyError(f"{self.id} has no branch {label!r}")

    def recur_alpha(self, n: int, th: ParamPoint) -> Fraction:
        return self.main.alpha(n, th)

    def recur_beta(self, n: int, th: ParamPoint) -> Fraction:
        return self.main.beta(n, th)

    def recur_gamma(self, n: int, th: ParamPoint) -> Fraction:
        return self.main.gamma(n, th)

    def root_c(self, th: ParamPoint) -> Fraction:
        return self.main.root(th)

    def value_at_root(self, n: int, th: ParamPoint) -> Fraction:
        return self.main.value_at_root(n, th)


# ---------------------------------------------------------------------------
# validity helpers


def _q_ok(q: Fraction) -> str | None:
    if q in (0, 1, -1):
        return "q must avoid {0, 1, -1}"
    return None


def _no_power_hit(val: Fraction, q: Fraction, target: Fraction, ks: range, what: str) -> str | None:
    """Reject when val * q^k == target for some k in ks."""
    qk = q ** ks.start
    for k in ks:
        if val * qk == target:
            return f"{what} (k={k})"
        qk *= q
    return None


def _neg_int(v: Fraction) -> bool:
    return v.denominator == 1 and v <= 0


def _valid_L(th):
    if _neg_int(th["alpha"] + 1):
        return "alpha must not be a negative integer"


def _valid_C(th):
    if th["a"] == 0:
        return "a must be nonzero"


def _valid_M(th):
    if th["c"] in (0, 1):
        return "c must avoid {0, 1}"
    if _neg_int(th["beta"]):
        return "beta must not be 0, -1, -2, ..."


def _valid_bqL(th):
    a, b, q = th["a"], th["b"], th["q"]
    return (
        _q_ok(q)
        or ("a and b must be nonzero" if a == 0 or b == 0 else None)
        or _no_power_hit(a, q, 1, range(0, POLE_RANGE), "a q^k = 1")
        or _no_power_hit(b, q, 1, range(0, POLE_RANGE), "b q^k = 1")
    )


def _valid_qM(th):
    b, c, q = th["b"], th["c"], th["q"]
    return (
        _q_ok(q)
        or ("c must be nonzero" if c == 0 else None)
        or _no_power_hit(b, q, 1, range(1, POLE_RANGE), "b q^k = 1")
        or _no_power_hit(Fraction(-1), q, c, range(1, POLE_RANGE), "c = -q^k")
    )


def _valid_lqL(th):
    a, q = th["a"], th["q"]
    return (
        _q_ok(q)
        or ("a must be nonzero" if a == 0 else None)
        or _no_power_hit(a, q, 1, range(0, POLE_RANGE), "a q^k = 1")
    )


def _valid_qL(th):
    t, q = th["t"], th["q"]
    return (
        _q_ok(q)
        or ("t = q^alpha must be nonzero" if t == 0 else None)
        or _no_power_hit(t, q, 1, range(0, POLE_RANGE), "t q^k = 1")
    )


def _valid_qC(th):
    a, q = th["a"], th["q"]
    return (
        _q_ok(q)
        or ("a must be nonzero" if a == 0 else None)
        or _no_power_hit(Fraction(-1), q, a, range(0, POLE_RANGE), "a = -q^k")
    )


def _valid_ZLB(th):
    return _q_ok(th["q"]) or ("a must be nonzero" if th["a"] == 0 else None)


def _valid_SW(th):
    return _q_ok(th["q"])


# ---------------------------------------------------------------------------
# generators (standard normalization)


def _gen_L(n, th):
    al = th["alpha"]
    return hyper_sum(hyper([-n], [al + 1], X, n)).scale(pochhammer(al + 1, n) / factorial(n))


def _gen_C(n, th):
    return hyper_sum(hyper([-n, -X], [], Poly.const(-1 / th["a"]), n))


def _gen_M(n, th):
    return hyper_sum(hyper([-n, -X], [th["beta"]], Poly.const(1 - 1 / th["c"]), n))


def _gen_bqL(n, th):
    q = th["q"]
    return hyper_sum(qhyper([q**-n, 0, X], [th["a"] * q, th["b"] * q], q, Poly.const(q), n))


def _gen_qM(n, th):
    q = th["q"]
    return hyper_sum(qhyper([q**-n, X], [th["b"] * q], q, Poly.const(-(q ** (n + 1)) / th["c"]), n))


def _gen_lqL(n, th):
    q = th["q"]
    return hyper_sum(qhyper([q**-n, 0], [th["a"] * q], q, X.scale(q), n))


def _gen_qL(n, th):
    t, q = th["t"], th["q"]
    s = hyper_sum(qhyper([q**-n], [t * q], q, X.scale(-(q ** (n + 1)) * t), n))
    return s.scale(qpochhammer(t * q, q, n) / qfactorial(q, n))


def _gen_qC(n, th):
    q = th["q"]
    return hyper_sum(qhyper([q**-n, X], [0], q, Poly.const(-(q ** (n + 1)) / th["a"]), n))


def _gen_ZLB(n, th):
    q = th["q"]
    return hyper_sum(qhyper([q**-n, 0], [], q, X.scale(-1 / th["a"]), n))


def _gen_SW(n, th):
    q = th["q"]
    return hyper_sum(qhyper([q**-n], [0], q, X.scale(-(q ** (n + 1))), n))


# ---------------------------------------------------------------------------
# samplers: draw raw values; validity is enforced by the caller


def _draw(rng: random.Random, bound: int, nonzero: bool = True) -> Fraction:
    while True:
        v = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if v != 0 or not nonzero:
            return v


def _sampler(*symbols: str):
    def sample(rng: random.Random, bound: int) -> dict[str, Fraction]:
        return {s: _draw(rng, bound) for s in symbols}

    return sample


# ---------------------------------------------------------------------------
# recurrence rows


def _one(n, th):
    return Fraction(1)


def _zero(th):
    return Fraction(0)


def _sum_rest(const: Callable[[ParamPoint], Fraction], alpha: Scalar, gamma: Scalar) -> Scalar:
    return lambda n, th: const(th) - alpha(n, th) - gamma(n, th)


def _L_alpha(n, th):
    return -n - th["alpha"] - 1


def _L_gamma(n, th):
    return Fraction(-n)


def _C_alpha(n, th):
    return -th["a"]


def _M1_alpha(n, th):
    c = th["c"]
    return c * (n + th["beta"]) / (c - 1)


def _M1_gamma(n, th):
    return Fraction(n) / (th["c"] - 1)


def _M2_alpha(n, th):
    return (n + th["beta"]) / (th["c"] - 1)


def _M2_gamma(n, th):
    c = th["c"]
    return n * c / (c - 1)


def _bqL_alpha(n, th):
    a, b, q = th["a"], th["b"], th["q"]
    return (1 - a * q ** (n + 1)) * (1 - b * q ** (n + 1))


def _bqL_gamma(n, th):
    a, b, q = th["a"], th["b"], th["q"]
    return a * b * q ** (n + 1) * (q**n - 1)


def _qM_alpha(n, th):
    b, c, q = th["b"], th["c"], th["q"]
    return (c + q ** (n + 1)) * (b * q ** (n + 1) - 1) / q ** (2 * n + 1)


def _qM_gamma(n, th):
    c, q = th["c"], th["q"]
    return c * q * (q**n - 1) / q ** (2 * n + 1)


def _lqL_alpha(n, th):
    a, q = th["a"], th["q"]
    return q**n * (a * q ** (n + 1) - 1)


def _lqL_gamma(n, th):
    a, q = th["a"], th["q"]
    return a * q**n * (q**n - 1)


def _qL_alpha(n, th):
    t, q = th["t"], th["q"]
    return (q ** (n + 1) * t - 1) / (q ** (2 * n + 1) * t)


def _qL_gamma(n, th):
    t, q = th["t"], th["q"]
    return q * (q**n - 1) / (q ** (2 * n + 1) * t)


def _qC_alpha(n, th):
    a, q = th["a"], th["q"]
    return -(a + q ** (n + 1)) / q ** (2 * n + 1)


def _qC_gamma(n, th):
    a, q = th["a"], th["q"]
    return a * q * (q**n - 1) / q ** (2 * n + 1)


def _ZLB_alpha(n, th):
    return -th["a"] * th["q"] ** (2 * n + 1)


def _ZLB_gamma(n, th):
    a, q = th["a"], th["q"]
    return -a * q**n * (q**n - 1)


def _SW_alpha(n, th):
    return Fraction(-1) / th["q"] ** (2 * n + 1)


def _SW_gamma(n, th):
    q = th["q"]
    return q * (q**n - 1) / q ** (2 * n + 1)


# d_n^2 / d_(n-1)^2 as read off the printed d_n^2 column (Gamma ratios reduced).


def _qp_ratio(a: Fraction, q: Fraction, n: int) -> Fraction:
    """(a;q)_n / (a;q)_(n-1) = 1 - a q^(n-1)."""
    return 1 - a * q ** (n - 1)


def _ns_L(n, th):
    return Fraction(n) / (n + th["alpha"])


def _ns_C(n, th):
    return Fraction(n) / th["a"]


def _ns_M1(n, th):
    return Fraction(n) / ((th["beta"] + n - 1) * th["c"])


def _ns_M2(n, th):
    return n * th["c"] / (th["beta"] + n - 1)


def _ns_bqL(n, th):
    a, b, q = th["a"], th["b"], th["q"]
    qi = 1 / q
    return _qp_ratio(qi, qi, n) * q / (_qp_ratio(qi / a, qi, n) * _qp_ratio(qi / b, qi, n))


def _ns_qM(n, th):
    b, c, q = th["b"], th["c"], th["q"]
    return _qp_ratio(q, q, n) / (_qp_ratio(b * q, q, n) * _qp_ratio(-q / c, q, n) * q)


def _ns_lqL(n, th):
    a, q = th["a"], th["q"]
    return _qp_ratio(q, q, n) * a * q / _qp_ratio(a * q, q, n)


def _ns_qL(n, th):
    # printed "(q^(alpha+1);q)" lacks its index; read as (q^(alpha+1);q)_n
    t, q = th["t"], th["q"]
    return _qp_ratio(q, q, n) / (_qp_ratio(t * q, q, n) * q)


def _ns_qC(n, th):
    a, q = th["a"], th["q"]
    return _qp_ratio(q, q, n) / (_qp_ratio(-q / a, q, n) * q)


def _ns_ZLB(n, th):
    a, q = th["a"], th["q"]
    return _qp_ratio(q, q, n) * a * q / _qp_ratio(a * q, q, n)


def _ns_SW(n, th):
    q = th["q"]
    return _qp_ratio(q, q, n) / q


def _mk_branch(label, root, value, alpha, gamma, const, row, pearson=None, kind=None, ns=None):
    return Branch(
        label=label,
        root=root,
        value_at_root=value,
        alpha=alpha,
        beta=_sum_rest(const, alpha, gamma),
        gamma=gamma,
        table_row=row,
        pearson=pearson,
        pearson_kind=kind,
        norm_sq_ratio=ns,
    )


def _build_registry() -> dict[FamilyId, FamilySpec]:
    F = FamilyId
    reg: dict[FamilyId, FamilySpec] = {}

    reg[F.L] = FamilySpec(
        id=F.L,
        name="Laguerre",
        parameters=("alpha",),
        variable="x",
        generator=_gen_L,
        branches=(
            _mk_branch(
                "c=0", _zero, lambda n, th: pochhammer(th["alpha"] + 1, n) / factorial(n),
                _L_alpha, _L_gamma, _zero,
                ("-n-alpha-1", "2n+alpha+1", "-n", "n! Gamma(alpha+1)^2 / Gamma(n+alpha+1)"),
                pearson=lambda th: X, kind="phi", ns=_ns_L,
            ),
        ),
        validity=_valid_L,
        phi=lambda th: X,
        phi_star=lambda th: X,
        sampler=_sampler("alpha"),
    )

    reg[F.C] = FamilySpec(
        id=F.C,
        name="Charlier",
        parameters=("a",),
        variable="x",
        generator=_gen_C,
        branches=(
            _mk_branch(
                "c=0", _zero, _one, _C_alpha, _L_gamma, _zero,
                ("-a", "n+a", "-n", "n! / a^n"),
                pearson=lambda th: X, kind="phi", ns=_ns_C,
            ),
        ),
        validity=_valid_C,
        phi=lambda th: X,
        phi_star=lambda th: Poly.const(th["a"]),
        sampler=_sampler("a"),
    )

    reg[F.M] = FamilySpec(
        id=F.M,
        name="Meixner",
        parameters=("beta", "c"),
        variable="x",
        generator=_gen_M,
        branches=(
            _mk_branch(
                "c1=0", _zero, _one, _M1_alpha, _M1_gamma, _zero,
                ("c(n+beta)/(c-1)", "-(n+c(n+beta))/(c-1)", "n/(c-1)",
                 "n! Gamma(beta) / (Gamma(beta+n) c^n)"),
                pearson=lambda th: X, kind="phi", ns=_ns_M1,
            ),
            _mk_branch(
                "c2=-beta", lambda th: -th["beta"], lambda n, th: th["c"] ** -n,
                _M2_alpha, _M2_gamma, lambda th: -th["beta"],
                ("(n+beta)/(c-1)", "-beta-alpha_n-gamma_n", "n c/(c-1)",
                 "n! Gamma(beta) c^n / Gamma(beta+n)"),
                pearson=lambda th: Poly.linear(th["c"] * th["beta"], th["c"]), kind="phi*", ns=_ns_M2,
            ),
        ),
        validity=_valid_M,
        phi=lambda th: X,
        phi_star=lambda th: Poly.linear(th["c"] * th["beta"], th["c"]),
        sampler=_sampler("beta", "c"),
    )

    reg[F.bqL] = FamilySpec(
        id=F.bqL,
        name="big q-Laguerre",
        parameters=("a", "b", "q"),
        variable="x",
        generator=_gen_bqL,
        branches=(
            _mk_branch(
                "c=1", lambda th: Fraction(1), _one, _bqL_alpha, _bqL_gamma, lambda th: Fraction(1),
                ("(1-a q^(n+1))(1-b q^(n+1))", "1-alpha_n-gamma_n", "a b q^(n+1)(q^n-1)",
                 "(q^-1;q^-1)_n q^n / (a^-1 q^-1, b^-1 q^-1; q^-1)_n"),
                pearson=lambda th: Poly.linear(1, -1).scale(th["a"] * th["b"] * th["q"]),
                kind="phi*", ns=_ns_bqL,
            ),
        ),
        validity=_valid_bqL,
        phi=lambda th: (X - th["a"] * th["q"]) * (X - th["b"] * th["q"]),
        phi_star=lambda th: Poly.linear(1, -1).scale(th["a"] * th["b"] * th["q"]),
        sampler=_sampler("a", "b", "q"),
    )

    reg[F.qM] = FamilySpec(
        id=F.qM,
        name="q-Meixner",
        parameters=("b", "c", "q"),
        variable="y",
        generator=_gen_qM,
        branches=(
            _mk_branch(
                "c=bq", lambda th: th["b"] * th["q"],
                lambda n, th: qpochhammer(-th["q"] / th["c"], th["q"], n),
                _qM_alpha, _qM_gamma, lambda th: th["b"] * th["q"],
                ("(c+q^(n+1))(b q^(n+1)-1)/q^(2n+1)", "b q-alpha_n-gamma_n", "c q(q^n-1)/q^(2n+1)",
                 "(q;q)_n / ((b q, -c^-1 q; q)_n q^n)"),
                ns=_ns_qM,
            ),
        ),
        validity=_valid_qM,
        sampler=_sampler("b", "c", "q"),
    )

    reg[F.lqL] = FamilySpec(
        id=F.lqL,
        name="little q-Laguerre",
        parameters=("a", "q"),
        variable="x",
        generator=_gen_lqL,
        branches=(
            _mk_branch(
                "c=0", _zero, _one, _lqL_alpha, _lqL_gamma, _zero,
                ("q^n(a q^(n+1)-1)", "-alpha_n-gamma_n", "a q^n(q^n-1)", "(q;q)_n a^n q^n / (a q;q)_n"),
                pearson=lambda th: X.scale(th["a"]), kind="phi*", ns=_ns_lqL,
            ),
        ),
        validity=_valid_lqL,
        phi=lambda th: (1 - X) * X,
        phi_star=lambda th: X.scale(th["a"]),
        sampler=_sampler("a", "q"),
    )

    reg[F.qL] = FamilySpec(
        id=F.qL,
        name="q-Laguerre",
        parameters=("t", "q"),
        variable="x",
        generator=_gen_qL,
        branches=(
            _mk_branch(
                "c=0", _zero,
                lambda n, th: qpochhammer(th["t"] * th["q"], th["q"], n) / qfactorial(th["q"], n),
                _qL_alpha, _qL_gamma, _zero,
                ("(q^(n+1+alpha)-1)/q^(2n+1+alpha)", "-alpha_n-gamma_n", "q(q^n-1)/q^(2n+alpha+1)",
                 "(q;q)_n / ((q^(alpha+1);q) q^n)"),
                ns=_ns_qL,
            ),
        ),
        validity=_valid_qL,
        sampler=_sampler("t", "q"),
    )

    reg[F.qC] = FamilySpec(
        id=F.qC,
        name="q-Charlier",
        parameters=("a", "q"),
        variable="y",
        generator=_gen_qC,
        branches=(
            _mk_branch(
                "c=0", _zero, lambda n, th: qpochhammer(-th["q"] / th["a"], th["q"], n),
                _qC_alpha, _qC_gamma, _zero,
                ("-(a+q^(n+1))/q^(2n+1)", "-alpha_n-gamma_n", "a q(q^n-1)/q^(2n+1)",
                 "(q;q)_n / ((-a^-1 q,q)_n q^n)"),
                ns=_ns_qC,
            ),
        ),
        validity=_valid_qC,
        sampler=_sampler("a", "q"),
    )

    reg[F.ZLB] = FamilySpec(
        id=F.ZLB,
        name="0-Laguerre/Bessel",
        parameters=("a", "q"),
        variable="x",
        generator=_gen_ZLB,
        branches=(
            _mk_branch(
                "c=0", _zero, _one, _ZLB_alpha, _ZLB_gamma, _zero,
                ("-a q^(2n+1)", "-alpha_n-gamma_n", "-a q^n(q^n-1)", "(q,q)_n a^n q^n / (a q,q)_n"),
                ns=_ns_ZLB,
            ),
        ),
        validity=_valid_ZLB,
        sampler=_sampler("a", "q"),
    )

    reg[F.SW] = FamilySpec(
        id=F.SW,
        name="Stieltjes-Wigert",
        parameters=("q",),
        variable="x",
        generator=_gen_SW,
        branches=(
            _mk_branch(
                "c=0", _zero, _one, _SW_alpha, _SW_gamma, _zero,
                ("-1/q^(2n+1)", "-alpha_n-gamma_n", "q(q^n-1)/q^(2n+1)", "(q;q)_n / q^n"),
                pearson=lambda th: X, kind="phi*", ns=_ns_SW,
            ),
        ),
        validity=_valid_SW,
        phi=lambda th: X * X,
        phi_star=lambda th: X,
        sampler=_sampler("q"),
    )
    return reg


REGISTRY: dict[FamilyId, FamilySpec] = _build_registry()
FAMILY_ORDER: tuple[FamilyId, ...] = tuple(FamilyId)


def get_family(fam) -> FamilySpec:
    return REGISTRY[FamilyId.parse(fam)]


def make_params(fam, values: Mapping[str, RationalLike] | None = None, **kw) -> ParamPoint:
    """Build a validated ParamPoint for ``fam``."""
    spec = get_family(fam)
    th = ParamPoint(values, **kw)
    check_params(spec, th)
    return th


def check_params(spec: FamilySpec, th: ParamPoint) -> None:
    missing = [s for s in spec.parameters if s not in th]
    if missing:
        raise InvalidParameter(f"{spec.id}: missing parameter(s) {', '.join(missing)}")
    extra = [s for s in th if s not in spec.parameters]
    if extra:
        raise InvalidParameter(f"{spec.id}: unknown parameter(s) {', '.join(extra)}")
    why = spec.validity(th)
    if why:
        raise InvalidParameter(f"{spec.id}: {why} at {th!r}")


def is_valid(fam, th: ParamPoint) -> bool:
    try:
        check_params(get_family(fam), th)
    except InvalidParameter:
        return False
    return True


@lru_cache(maxsize=8192)
def _generate(fam: FamilyId, n: int, th: ParamPoint) -> Poly:
    # ladders and shifted-parameter operators revisit the same (n, theta)
    # many times; Poly is immutable, so sharing cached results is safe
    spec = get_family(fam)
    check_params(spec, th)
    return spec.generator(n, th)


def family_poly(fam, n: int, th: ParamPoint, normalized: bool = False, branch: str | None = None) -> Poly:
    """p_n in the family's natural variable; p_(-1) is the zero polynomial.

    With ``normalized`` the result is divided by its value at the branch root,
    giving the sequence described by the recurrence coefficients.
    """
    spec = get_family(fam)
    if n < 0:
        check_params(spec, th)
        return ZERO
    p = _generate(spec.id, n, th)
    if normalized:
        v = spec.branch(branch).value_at_root(n, th)
        if v == 0:
            raise InvalidParameter(f"{spec.id}: p_{n} vanishes at the normalization root")
        p = p / v
    return p


def recurrence_coeffs(fam, n: int, th: ParamPoint, branch: str | None = None) -> tuple[Fraction, Fraction, Fraction]:
    spec = get_family(fam)
    check_params(spec, th)
    br = spec.branch(branch)
    return br.alpha(n, th), br.beta(n, th), br.gamma(n, th)


def norm_ratio(fam, n: int, th: ParamPoint, branch: str | None = None) -> Fraction:
    """rho_n = gamma_n / alpha_(n-1) = d_n^2 / d_(n-1)^2."""
    if n < 1:
        raise ValueError("norm_ratio needs n >= 1")
    spec = get_family(fam)
    check_params(spec, th)
    br = spec.branch(branch)
    a = br.alpha(n - 1, th)
    if a == 0:
        raise InvalidParameter(f"{spec.id}: alpha_{n - 1} vanishes; degenerate parameter point")
    return br.gamma(n, th) / a


def norm_sq(fam, n: int, th: ParamPoint, branch: str | None = None) -> Fraction:
    """d_n^2 relative to d_0^2 := 1, as the telescoped product of rho_k."""
    out = Fraction(1)
    for k in range(1, n + 1):
        out *= norm_ratio(fam, k, th, branch)
    return out


def sample_params(fam, rng: random.Random, bound: int = 40, extra_check=None, max_tries: int = 1000) -> ParamPoint:
    """Rejection-sample a valid parameter point.

    ``extra_check(th)`` may veto a point (return False or raise
    InvalidParameter / ZeroDivisionError).
    """
    spec = get_family(fam)
    for _ in range(max_tries):
        th = ParamPoint(spec.sampler(rng, bound))
        if spec.validity(th):
            continue
        if extra_check is not None:
            try:
                if extra_check(th) is False:
                    continue
            except (InvalidParameter, ZeroDivisionError):
                continue
        return th
    raise InvalidParameter(f"{spec.id}: parameter sampling exhausted after {max_tries} tries")


# ---------------------------------------------------------------------------
# inter-family relations


@dataclass(frozen=True)
class RelationEdge:
    source: FamilyId
    target: FamilyId
    kind: str  # "limit" or "particular case"
    bidirectional: bool = False
    equation: str | None = None


RELATION_EDGES: tuple[RelationEdge, ...] = (
    RelationEdge(FamilyId.bqL, FamilyId.L, "limit"),
    RelationEdge(FamilyId.lqL, FamilyId.L, "limit"),
    RelationEdge(FamilyId.qL, FamilyId.L, "limit"),
    RelationEdge(FamilyId.qM, FamilyId.M, "limit"),
    RelationEdge(FamilyId.lqL, FamilyId.C, "limit"),
    RelationEdge(FamilyId.qL, FamilyId.C, "limit"),
    RelationEdge(FamilyId.qC, FamilyId.C, "limit"),
    RelationEdge(FamilyId.bqL, FamilyId.lqL, "limit"),
    RelationEdge(FamilyId.qL, FamilyId.SW, "limit"),
    RelationEdge(FamilyId.qC, FamilyId.SW, "limit"),
    RelationEdge(FamilyId.M, FamilyId.L, "limit"),
    RelationEdge(FamilyId.M, FamilyId.C, "limit"),
    RelationEdge(FamilyId.qC, FamilyId.qM, "particular case"),
    RelationEdge(FamilyId.bqL, FamilyId.qM, "particular case", True, "4.1"),
    RelationEdge(FamilyId.lqL, FamilyId.qL, "particular case", True, "4.2"),
    RelationEdge(FamilyId.qL, FamilyId.qC, "particular case", True, "4.3"),
    RelationEdge(FamilyId.ZLB, FamilyId.SW, "particular case", True, "4.4"),
)


@dataclass(frozen=True)
class Relation:
    key: str
    parameters: tuple[str, ...]
    text: str
    sides: Callable[[int, ParamPoint], tuple[Poly, Poly]]


def _rel_41(n, th):
    a, b, q = th["a"], th["b"], th["q"]
    lhs = family_poly(FamilyId.bqL, n, ParamPoint(a=a, b=b, q=1 / q))
    m = family_poly(FamilyId.qM, n, ParamPoint(b=1 / a, c=-b, q=q))
    rhs = m.subst_affine(q / a) / qpochhammer(q / b, q, n)
    return lhs, rhs


def _rel_42(n, th):
    t, q = th["t"], th["q"]
    lhs = family_poly(FamilyId.lqL, n, ParamPoint(a=t, q=1 / q))
    ql = family_poly(FamilyId.qL, n, ParamPoint(t=t, q=q))
    rhs = ql.subst_affine(-1).scale(qfactorial(q, n) / qpochhammer(t * q, q, n))
    return lhs, rhs


def _rel_43(n, th):
    t, q = th["t"], th["q"]
    lhs = family_poly(FamilyId.qL, n, ParamPoint(t=t, q=q))
    qc = family_poly(FamilyId.qC, n, ParamPoint(a=-1 / t, q=q))
    rhs = qc.subst_affine(-1) / qfactorial(q, n)
    return lhs, rhs


def _rel_44(n, th):
    a, q = th["a"], th["q"]
    lhs = family_poly(FamilyId.SW, n, ParamPoint(q=1 / q)).subst_affine(1 / a)
    rhs = family_poly(FamilyId.ZLB, n, ParamPoint(a=a, q=q))
    return lhs, rhs


RELATIONS: dict[str, Relation] = {
    "4.1": Relation("4.1", ("a", "b", "q"),
                    "p_n(x;a,b;1/q) = M_n(xq/a; 1/a, -b; q) / (q/b;q)_n", _rel_41),
    "4.2": Relation("4.2", ("t", "q"),
                    "p_n(x;t|1/q) = (q;q)_n/(tq;q)_n L_n^(alpha)(-x;q), t = q^alpha", _rel_42),
    "4.3": Relation("4.3", ("t", "q"),
                    "L_n^(alpha)(x;q) = C_n(-x; -1/t; q) / (q;q)_n, t = q^alpha", _rel_43),
    "4.4": Relation("4.4", ("a", "q"),
                    "S_n(x/a; 1/q) = 2phi0(q^-n, 0; -; q, -x/a) = l_n(x;a)", _rel_44),
}


def related_poly(relation: str, n: int, th: ParamPoint) -> tuple[Poly, Poly]:
    key = relation.removeprefix("Eq").removeprefix("eq").strip()
    try:
        rel = RELATIONS[key]
    except KeyError:
        raise KeyError(f"unknown relation {relation!r}") from None
    return rel.sides(n, th)
