from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import rationals
from lcpoly.arith import format_rational, parse_rational, pochhammer, qpochhammer, rat
from lcpoly.poly import X, Poly, pochhammer_poly


def test_pochhammer_examples():
    assert pochhammer(Fraction(7, 3), 0) == 1
    assert pochhammer(-3, 5) == 0
    assert pochhammer(2, 3) == 24


def test_qpochhammer_examples():
    assert qpochhammer(5, Fraction(1, 2), 0) == 1
    assert qpochhammer(1, 3, 3) == 0
    assert qpochhammer(2, 2, 2) == 3


def test_pochhammer_poly_examples():
    assert pochhammer_poly(X, 0) == Poly.const(1)
    assert pochhammer_poly(-X, 1) == -X
    assert pochhammer_poly(-X, 2) == X * X - X


@pytest.mark.parametrize("text,value", [("1/3", Fraction(1, 3)), ("-7", Fraction(-7)), ("22/7", Fraction(22, 7)),
                                        ("4/-6", Fraction(-2, 3))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["", "1/0", "0.5", "x", "1/2/3"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_rat_refuses_float():
    with pytest.raises(TypeError):
        rat(0.5)


@given(rationals())
def test_format_parse_round_trip(v):
    assert parse_rational(format_rational(v)) == v


@given(rationals(), st.integers(0, 20), st.integers(0, 20))
def test_pochhammer_split(a, m, n):
    assert pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n)


@given(rationals(8), rationals(5, nonzero=True), st.integers(0, 20), st.integers(0, 20))
def test_qpochhammer_split(a, q, m, n):
    assert qpochhammer(a, q, m + n) == qpochhammer(a, q, m) * qpochhammer(a * q**m, q, n)


@given(rationals(), rationals(), rationals(), st.integers(0, 10))
def test_pochhammer_poly_evaluates_to_pochhammer(c0, c1, x0, n):
    p = Poly.linear(c0, c1)
    assert pochhammer_poly(p, n).eval(x0) == pochhammer(p.eval(x0), n)


@given(rationals(), rationals(), rationals())
def test_sum_is_order_independent(a, b, c):
    left, right = (a + b) + c, c + (b + a)
    assert (left.numerator, left.denominator) == (right.numerator, right.denominator)
    assert left.denominator > 0
