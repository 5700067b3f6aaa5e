"""Operators acting on index- or parameter-indexed families of polynomials.

A "sequence" here is any callable ``v -> Poly`` where ``v`` is the degree n
or a parameter value (alpha, beta, a, ...).  Shift operators in a parameter
are realized by calling the generator at the exactly shifted point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .arith import RationalLike, rat
from .poly import ZERO, Poly

Seq = Callable[..., Poly]


def forward(f: Seq) -> Seq:
    """(Delta f)(v) = f(v+1) - f(v)."""
    return lambda v: f(v + 1) - f(v)


def backward(f: Seq) -> Seq:
    """(nabla f)(v) = f(v) - f(v-1)."""
    return lambda v: f(v) - f(v - 1)


def qdiff(f: Seq, q: RationalLike) -> Seq:
    """Hahn operator in the argument of f: (f(qv) - f(v)) / (v(q-1))."""
    q = rat(q)

    def g(v):
        return (f(q * v) - f(v)) / (v * (q - 1))

    return g


def iterate(op: Callable[[Seq], Seq], k: int, f: Seq) -> Seq:
    for _ in range(k):
        f = op(f)
    return f


def ladder(f: Seq, k: int, op: Callable[[Seq], Seq], weight: Callable[[int, object], Fraction | Poly]) -> Seq:
    """Apply k steps f_j(v) = weight(j, v) * op(f_(j-1))(v), j = 1..k.

    Step j's weight multiplies after its operator, so step j+1's operator
    acts on it.  This is the left-to-right reading of ladders printed as
    ``w_k op ... w_1 op f``.
    """
    for j in range(1, k + 1):
        inner = op(f)
        f = (lambda inner_, j_: (lambda v: inner_(v) * weight(j_, v)))(inner, j)
    return f


@dataclass(frozen=True)
class SeqOperator:
    """Named operator for reports: delta_n, nabla_n, delta_param, nabla_param,
    qder_param, qinvder_param or d_param."""

    kind: str
    symbol: str = "n"

    def apply(self, f: Seq, q: RationalLike | None = None) -> Seq:
        if self.kind in ("delta_n", "delta_param"):
            return forward(f)
        if self.kind in ("nabla_n", "nabla_param"):
            return backward(f)
        if self.kind == "qder_param":
            return qdiff(f, q)
        if self.kind == "qinvder_param":
            return qdiff(f, 1 / rat(q))
        raise ValueError(f"operator {self.kind} has no pointwise form")

    def __str__(self) -> str:
        names = {
            "delta_n": "Delta_n",
            "nabla_n": "nabla_n",
            "delta_param": f"Delta_{self.symbol}",
            "nabla_param": f"nabla_{self.symbol}",
            "qder_param": f"D_q,{self.symbol}",
            "qinvder_param": f"D_1/q,{self.symbol}",
            "d_param": f"d/d{self.symbol}",
        }
        return names.get(self.kind, self.kind)


class ParamPoly:
    """Polynomial in a parameter v whose coefficients are polynomials in x.

    ``coeffs[j]`` multiplies v**j.  Used for exact d/dv of quantities like
    c^n (beta)_n M_n(x; beta, c), which are polynomial in c.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Poly]):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def interpolate(cls, f: Callable[[Fraction], Poly], degree: int, nodes: Sequence[Fraction]) -> "ParamPoly":
        """Newton interpolation through ``degree + 1`` nodes; one more node
        confirms the degree bound."""
        if len(nodes) < degree + 2:
            raise ValueError("need degree + 2 nodes (one for the consistency check)")
        xs = [rat(v) for v in nodes[: degree + 2]]
        ys = [f(v) for v in xs]
        dd = list(ys[: degree + 1])
        for level in range(1, degree + 1):
            for i in range(degree, level - 1, -1):
                dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
        acc: list[Poly] = [dd[degree]]
        for i in range(degree - 1, -1, -1):
            # acc <- acc * (v - xs[i]) + dd[i]
            shifted = [ZERO] + acc
            for j, c in enumerate(acc):
                shifted[j] = shifted[j] - c.scale(xs[i])
            shifted[0] = shifted[0] + dd[i]
            acc = shifted
        out = cls(acc)
        if out.eval(xs[-1]) != ys[-1]:
            raise ValueError("parameter dependence exceeds the stated polynomial degree")
        return out

    def eval(self, v: RationalLike) -> Poly:
        v = rat(v)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc.scale(v) + c
        return acc

    def derivative(self) -> "ParamPoly":
        return ParamPoly([c.scale(j) for j, c in enumerate(self.coeffs)][1:])

    def mul_linear(self, c0: RationalLike | Poly, c1: RationalLike = 0) -> "ParamPoly":
        """Multiply by (c0 + c1 v); c0 may be a polynomial in x."""
        c0 = c0 if isinstance(c0, Poly) else Poly.const(c0)
        c1 = rat(c1)
        out = [ZERO] * (len(self.coeffs) + 1)
        for j, c in enumerate(self.coeffs):
            out[j] = out[j] + c * c0
            out[j + 1] = out[j + 1] + c.scale(c1)
        return ParamPoly(out)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def interpolation_nodes(count: int, avoid: Callable[[Fraction], bool], start: int = 2) -> list[Fraction]:
    """Small integer nodes, skipping any for which ``avoid(v)`` is true."""
    out: list[Fraction] = []
    v = start
    while len(out) < count:
        fv = Fraction(v)
        if not avoid(fv):
            out.append(fv)
        v += 1
    return out


def param_derivative(f: Callable[[Fraction], Poly], v0: RationalLike, degree: int,
                     avoid: Callable[[Fraction], bool] = lambda v: False) -> Poly:
    """d/dv f(v) at v0, for f polynomial in v of degree <= ``degree``."""
    nodes = interpolation_nodes(degree + 2, avoid)
    return ParamPoly.interpolate(f, degree, nodes).derivative().eval(v0)
