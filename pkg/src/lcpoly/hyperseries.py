"""Terminating ordinary and basic hypergeometric series as exact polynomials.

Upper parameters may be constants or linear polynomials in x (``-x`` in the
Charlier series, ``x`` in the big q-Laguerre series).  The argument may be a
constant or a monomial in x.  Only terminating series are evaluated: the
caller supplies the truncation index, normally the degree n forced by an
upper parameter -n or q^-n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Sequence

from .arith import RationalLike, binom2, factorial, pochhammer, qfactorial, qpochhammer, rat
from .poly import ONE, Poly, as_poly, pochhammer_poly, qpochhammer_poly


class SeriesError(ValueError):
    """Invalid series data: vanishing lower factor, bad base, bad parameter."""


@dataclass(frozen=True)
class SeriesSpec:
    numerator_params: tuple[Poly, ...]
    denominator_params: tuple[Fraction, ...]
    argument: Poly
    terms: int
    kind: Literal["ordinary", "basic"] = "ordinary"
    q: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "numerator_params", tuple(as_poly(p) for p in self.numerator_params))
        object.__setattr__(self, "denominator_params", tuple(rat(b) for b in self.denominator_params))
        object.__setattr__(self, "argument", as_poly(self.argument))
        if self.q is not None:
            object.__setattr__(self, "q", rat(self.q))
        if self.terms < 0:
            raise SeriesError("truncation index must be nonnegative")
        if any(p.degree > 1 for p in self.numerator_params):
            raise SeriesError("upper parameters of degree > 1 in x are not supported")
        if sum(1 for c in self.argument.coeffs if c != 0) > 1:
            raise SeriesError("argument must be a constant or a monomial in x")
        if self.kind == "basic":
            if self.q is None or self.q in (0, 1):
                raise SeriesError("basic series needs q not in {0, 1}")
        elif self.kind != "ordinary":
            raise SeriesError(f"unknown series kind {self.kind!r}")

    @property
    def r(self) -> int:
        return len(self.numerator_params)

    @property
    def s(self) -> int:
        return len(self.denominator_params)


def hyper(upper: Sequence, lower: Sequence, z, terms: int) -> SeriesSpec:
    """Shorthand for an ordinary rFs specification."""
    return SeriesSpec(tuple(upper), tuple(lower), as_poly(z), terms, "ordinary")


def qhyper(upper: Sequence, lower: Sequence, q: RationalLike, z, terms: int) -> SeriesSpec:
    """Shorthand for a basic r(phi)s specification."""
    return SeriesSpec(tuple(upper), tuple(lower), as_poly(z), terms, "basic", rat(q))


def hyper_sum(spec: SeriesSpec) -> Poly:
    """Sum the series for k = 0..terms as an exact polynomial.

    Terms are built incrementally: term_k = term_(k-1) * (ratio of factors).
    The basic case includes the ((-1)^k q^binom(k,2))^(1+s-r) factor, whose
    exponent may be negative (e.g. 2phi0); q is nonzero so that is exact.
    """
    if spec.kind == "ordinary":
        return _ordinary(spec)
    return _basic(spec)


def _ordinary(spec: SeriesSpec) -> Poly:
    upper, lower, z = spec.numerator_params, spec.denominator_params, spec.argument
    total = ONE
    term = ONE
    for k in range(spec.terms):
        # term_(k+1) = term_k * prod(a + k) / (prod(b + k) * (k+1)) * z
        den = Fraction(k + 1)
        for b in lower:
            if b + k == 0:
                raise SeriesError(f"lower parameter {b} gives a vanishing factor at k={k + 1}")
            den *= b + k
        for a in upper:
            term = term * (a + k)
        term = (term * z) / den
        total = total + term
    return total


def _basic(spec: SeriesSpec) -> Poly:
    upper, lower, z, q = spec.numerator_params, spec.denominator_params, spec.argument, spec.q
    e = 1 + spec.s - spec.r
    total = ONE
    term = ONE
    qk = Fraction(1)  # q**k
    for k in range(spec.terms):
        den = 1 - qk * q  # from (q;q)_(k+1)
        if den == 0:
            raise SeriesError(f"(q;q) factor vanishes at k={k + 1}")
        for b in lower:
            f = 1 - b * qk
            if f == 0:
                raise SeriesError(f"lower q-factor (1 - {b} q^{k}) vanishes")
            den *= f
        for a in upper:
            term = term * (1 - a.scale(qk))
        # ((-1)^(k+1) q^binom(k+1,2)) / ((-1)^k q^binom(k,2)) = -q^k
        ratio = (-qk) ** e
        term = (term * z).scale(ratio / den)
        total = total + term
        qk *= q
    return total


def scalar_hyper_sum(
    upper: Sequence[RationalLike],
    lower: Sequence[RationalLike],
    z: RationalLike,
    terms: int,
    q: RationalLike | None = None,
) -> Fraction:
    """Direct term-by-term summation with constant data.

    Uses closed-form Pochhammer products per term rather than the running
    ratio in :func:`hyper_sum`, so the two paths check each other.
    """
    z = rat(z)
    upper = [rat(a) for a in upper]
    lower = [rat(b) for b in lower]
    total = Fraction(0)
    for k in range(terms + 1):
        if q is None:
            num = Fraction(1)
            for a in upper:
                num *= pochhammer(a, k)
            den = factorial(k)
            for b in lower:
                den *= pochhammer(b, k)
            total += num / den * z**k
        else:
            qq = rat(q)
            num = Fraction(1)
            for a in upper:
                num *= qpochhammer(a, qq, k)
            den = qfactorial(qq, k)
            for b in lower:
                den *= qpochhammer(b, qq, k)
            e = 1 + len(lower) - len(upper)
            sign = Fraction((-1) ** k) * qq ** binom2(k)
            total += num / den * sign**e * z**k
    return total


def series_term(spec: SeriesSpec, k: int) -> Poly:
    """The k-th summand alone, from closed-form products."""
    z = spec.argument
    if spec.kind == "ordinary":
        num = ONE
        for a in spec.numerator_params:
            num = num * pochhammer_poly(a, k)
        den = factorial(k)
        for b in spec.denominator_params:
            den *= pochhammer(b, k)
        return num * z**k / den
    q = spec.q
    num = ONE
    for a in spec.numerator_params:
        num = num * qpochhammer_poly(a, q, k)
    den = qfactorial(q, k)
    for b in spec.denominator_params:
        den *= qpochhammer(b, q, k)
    e = 1 + spec.s - spec.r
    sign = Fraction((-1) ** k) * q ** binom2(k)
    return (num * z**k).scale(sign**e / den)
