"""Dense univariate polynomials over the rationals.

Coefficients are stored in ascending powers with no trailing zeros, so the
zero polynomial is the empty tuple and has degree -1.  This keeps ``==`` an
exact structural comparison.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .arith import RationalLike, format_rational, parse_rational, rat


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # constructors

    @classmethod
    def const(cls, c: RationalLike) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, c: RationalLike, k: int) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def linear(cls, c0: RationalLike, c1: RationalLike) -> "Poly":
        """c0 + c1*x."""
        return cls((c0, c1))

    # basic structure

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r})"

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # ring operations

    @staticmethod
    def _lift(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(other)

    def __add__(self, other) -> "Poly":
        o = self._lift(other).coeffs
        a = self.coeffs
        n = max(len(a), len(o))
        return Poly(
            (a[i] if i < len(a) else 0) + (o[i] if i < len(o) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Poly":
        return self._lift(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, s: RationalLike) -> "Poly":
        s = rat(s)
        if s == 0:
            raise ZeroDivisionError("polynomial divided by zero scalar")
        return Poly(c / s for c in self.coeffs)

    def divmod(self, d: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division: self = quotient * d + remainder, deg remainder < deg d."""
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - d.degree, 0)
        lead = d.lead()
        for i in range(len(rem) - 1, d.degree - 1, -1):
            c = rem[i] / lead
            if c:
                quot[i - d.degree] = c
                for j, dj in enumerate(d.coeffs):
                    rem[i - d.degree + j] -= c * dj
        return Poly(quot), Poly(rem)

    def exact_div(self, d: "Poly") -> "Poly":
        q, r = self.divmod(d)
        if not r.is_zero():
            raise ArithmeticError("polynomial division leaves a remainder")
        return q

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative polynomial power")
        out, base = Poly.const(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, s: RationalLike) -> "Poly":
        s = rat(s)
        return Poly(c * s for c in self.coeffs)

    # evaluation and substitution

    def __call__(self, x0):
        if isinstance(x0, Poly):
            return self.compose(x0)
        return self.eval(x0)

    def eval(self, x0: RationalLike) -> Fraction:
        """Horner evaluation."""
        x0 = rat(x0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def subst_affine(self, s: RationalLike, t: RationalLike = 0) -> "Poly":
        """Return p(s*x + t)."""
        s, t = rat(s), rat(t)
        if t == 0:
            # pure rescaling: coefficient k picks up s**k
            out, sk = [], Fraction(1)
            for c in self.coeffs:
                out.append(c * sk)
                sk *= s
            return Poly(out)
        return self.compose(Poly.linear(t, s))

    def shift(self, t: RationalLike) -> "Poly":
        """Return p(x + t)."""
        return self.subst_affine(1, t)

    # difference and differential operators

    def forward_diff(self) -> "Poly":
        return self.shift(1) - self

    def backward_diff(self) -> "Poly":
        return self - self.shift(-1)

    def derivative(self, order: int = 1) -> "Poly":
        p = self
        for _ in range(order):
            p = Poly(k * c for k, c in enumerate(p.coeffs) if k)
        return p

    def q_derivative(self, q: RationalLike) -> "Poly":
        """Hahn operator (p(qx) - p(x)) / (x(q-1))."""
        q = rat(q)
        if q == 1:
            raise ValueError("q-derivative needs q != 1")
        num = self.subst_affine(q) - self
        assert num.coeff(0) == 0, "p(qx)-p(x) must vanish at x=0"
        return Poly(c / (q - 1) for c in num.coeffs[1:])

    def inverse_q_derivative(self, q: RationalLike) -> "Poly":
        """Hahn operator with base 1/q."""
        q = rat(q)
        if q in (0, 1):
            raise ValueError("inverse q-derivative needs q not in {0, 1}")
        return self.q_derivative(1 / q)

    # serialization

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs] or ["0"]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Poly":
        return cls(parse_rational(str(s)) for s in data)

    def to_text(self, var: str = "x") -> str:
        """Render as e.g. ``1 - 2x + 1/2 x^2``."""
        if not self.coeffs:
            return "0"
        parts: list[tuple[bool, str]] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            neg, m = c < 0, abs(c)
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if not mono:
                body = format_rational(m)
            elif m == 1:
                body = mono
            elif m.denominator == 1:
                body = f"{m.numerator}{mono}"
            else:
                body = f"{format_rational(m)} {mono}"
            parts.append((neg, body))
        neg0, first = parts[0]
        out = ("-" if neg0 else "") + first
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def to_latex(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        out = ""
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            neg, m = c < 0, abs(c)
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{{{k}}}")
            if m.denominator == 1:
                num = "" if (m == 1 and mono) else str(m.numerator)
                body = num + mono
            else:
                body = f"\\frac{{{m.numerator}}}{{{m.denominator}}}" + mono
            if not out:
                out = ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        return out


X = Poly.x()
ONE = Poly.const(1)
ZERO = Poly()


def as_poly(p) -> Poly:
    return p if isinstance(p, Poly) else Poly.const(p)


def pochhammer_poly(p, n: int) -> Poly:
    """p (p+1) ... (p+n-1) as a polynomial."""
    p = as_poly(p)
    out = ONE
    for j in range(n):
        out = out * (p + j)
    return out


def qpochhammer_poly(p, q: RationalLike, n: int) -> Poly:
    """(1 - p)(1 - p q) ... (1 - p q^(n-1)) as a polynomial."""
    p, q = as_poly(p), rat(q)
    out = ONE
    qj = Fraction(1)
    for _ in range(n):
        out = out * (1 - p.scale(qj))
        qj *= q
    return out
