from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from conftest import polys, rationals
from lcpoly.poly import ONE, X, ZERO, Poly


def test_ring_examples():
    assert X + 0 == X
    assert (X + 1) * (X - 1) == X**2 - 1
    assert (X**2).scale(Fraction(1, 2)) == Poly((0, 0, Fraction(1, 2)))


def test_eval_examples():
    p = X**2 - 1
    assert p.eval(1) == 0
    assert p.eval(0) == -1
    assert (2 * X + 3).eval(Fraction(1, 2)) == 4


def test_subst_examples():
    assert (X**2).subst_affine(1, 1) == X**2 + 2 * X + 1
    p = Poly((3, -1, 5))
    assert p.subst_affine(1, 0) == p
    assert X.subst_affine(2) == 2 * X


def test_operator_examples():
    assert (X**2).forward_diff() == 2 * X + 1
    assert (X**2).backward_diff() == 2 * X - 1
    assert X.q_derivative(Fraction(5, 3)) == ONE
    assert (X**2).q_derivative(2) == 3 * X
    assert X.inverse_q_derivative(7) == ONE
    assert (X**2).inverse_q_derivative(2) == (3 * X) / 2
    assert Poly.const(9).inverse_q_derivative(3) == ZERO


def test_zero_convention():
    assert ZERO.coeffs == ()
    assert ZERO.degree == -1
    assert Poly((1, 0, 0)).coeffs == (Fraction(1),)


def test_q_derivative_rejects_q_one():
    with pytest.raises(ValueError):
        X.q_derivative(1)
    with pytest.raises(ValueError):
        X.inverse_q_derivative(0)


@pytest.mark.parametrize("q", [Fraction(2), Fraction(-1, 3), Fraction(5, 7)])
def test_q_derivative_of_monomials(q):
    for n in range(16):
        bracket = (q**n - 1) / (q - 1)
        expected = Poly.monomial(bracket, n - 1) if n else ZERO
        assert Poly.monomial(1, n).q_derivative(q) == expected


@given(polys(15))
def test_delta_nabla_commute(p):
    assert p.forward_diff().backward_diff() == p.backward_diff().forward_diff()


@given(polys(), polys(), rationals(), rationals(), rationals(5, nonzero=True))
def test_operators_are_linear(p, r, a, b, q):
    assume(q != 1)
    combo = p.scale(a) + r.scale(b)
    for op in (Poly.forward_diff, Poly.backward_diff, Poly.derivative, lambda f: f.q_derivative(q)):
        assert op(combo) == op(p).scale(a) + op(r).scale(b)


@given(polys(), rationals(5, nonzero=True))
def test_operators_drop_degree(p, q):
    assume(p.degree >= 1 and q != 1)
    # D_q x^n has coefficient [n]_q, which vanishes when q is a root of unity
    assume(all(q**k != 1 for k in range(1, p.degree + 1)))
    for d in (p.forward_diff(), p.backward_diff(), p.derivative(), p.q_derivative(q)):
        assert d.degree == p.degree - 1


@given(polys(), polys())
def test_degree_of_product(p, r):
    assume(p and r)
    assert (p * r).degree == p.degree + r.degree


@given(polys(), polys(5))
def test_divmod_reconstructs(p, d):
    assume(d)
    quot, rem = p.divmod(d)
    assert quot * d + rem == p
    assert rem.degree < d.degree


def test_exact_div():
    assert (X**2 - 1).exact_div(X + 1) == X - 1
    with pytest.raises(ArithmeticError):
        (X**2).exact_div(X + 1)


@given(polys())
def test_json_round_trip(p):
    assert Poly.from_json(p.to_json()) == p


def test_text_and_latex():
    p = Poly((1, -2, Fraction(1, 2)))
    assert p.to_text() == "1 - 2x + 1/2 x^2"
    assert p.to_latex() == r"1 - 2x + \frac{1}{2}x^{2}"
    assert ZERO.to_text() == "0"
