"""Exact rational scalars and shifted factorials.

``Rational`` is the standard library :class:`fractions.Fraction`, which keeps
every value in lowest terms with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

#: Parameter symbols used by the family registry.
PARAM_SYMBOLS = ("alpha", "a", "b", "beta", "c", "q", "t")


def rat(value: RationalLike) -> Fraction:
    """Coerce ints, fractions and strings like ``"-22/7"`` to a Fraction.

    Floats are refused: a float has already lost exactness.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot build an exact rational from {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"num"`` or ``"num/den"`` with integer num and den."""
    s = text.strip()
    if not s:
        raise ValueError("empty rational literal")
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"invalid rational literal: {text!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def format_rational(value: Fraction) -> str:
    """Serialize as ``"num/den"``, dropping ``/1``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def pochhammer(a: RationalLike, n: int) -> Fraction:
    """Rising factorial a(a+1)...(a+n-1); equal to 1 for n = 0."""
    if n < 0:
        raise ValueError("pochhammer index must be nonnegative")
    a = rat(a)
    out = Fraction(1)
    for j in range(n):
        out *= a + j
    return out


def qpochhammer(a: RationalLike, q: RationalLike, n: int) -> Fraction:
    """q-shifted factorial (1-a)(1-aq)...(1-aq^(n-1)); equal to 1 for n = 0."""
    if n < 0:
        raise ValueError("q-pochhammer index must be nonnegative")
    a, q = rat(a), rat(q)
    out = Fraction(1)
    term = a
    for _ in range(n):
        out *= 1 - term
        term *= q
    return out


def factorial(n: int) -> Fraction:
    return pochhammer(1, n)


def qfactorial(q: RationalLike, n: int) -> Fraction:
    """(q;q)_n."""
    return qpochhammer(q, q, n)


def binom2(k: int) -> int:
    return k * (k - 1) // 2
