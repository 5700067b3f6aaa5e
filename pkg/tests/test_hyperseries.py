from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from conftest import rationals
from lcpoly.arith import qpochhammer
from lcpoly.hyperseries import SeriesError, hyper, hyper_sum, qhyper, scalar_hyper_sum, series_term
from lcpoly.poly import ONE, X, Poly, qpochhammer_poly


def test_ordinary_examples():
    assert hyper_sum(hyper([-1], [1], X, 1)) == 1 - X
    assert hyper_sum(hyper([Fraction(3, 2), X], [5], X, 0)) == ONE


def test_basic_example():
    q = Fraction(2)
    assert hyper_sum(qhyper([1 / q], [0], q, X.scale(-q * q), 1)) == 1 - 2 * X


def test_qpochhammer_poly_examples():
    assert qpochhammer_poly(X, 3, 0) == ONE
    assert qpochhammer_poly(X, 3, 1) == 1 - X
    assert qpochhammer_poly(X, 2, 2) == 1 - 3 * X + 2 * X**2


def test_invalid_specs():
    with pytest.raises(SeriesError):
        qhyper([1], [], 1, X, 2)
    with pytest.raises(SeriesError):
        hyper([1], [1], X, -1)
    with pytest.raises(SeriesError):
        hyper_sum(hyper([1], [-1], X, 3))  # (-1)_2 = 0 in the denominator


@given(st.integers(0, 12), rationals(nonzero=True), rationals())
def test_ordinary_truncation_is_natural(n, b, z):
    assume(all(b + j != 0 for j in range(n + 6)))
    spec = hyper([-n, X], [b], Poly.const(z), n + 5)
    for k in range(n + 1, n + 6):
        assert series_term(spec, k).is_zero()
    assert hyper_sum(spec) == hyper_sum(hyper([-n, X], [b], Poly.const(z), n))


@given(st.integers(0, 12), rationals(5, nonzero=True))
def test_basic_truncation_is_natural(n, q):
    assume(q not in (1, -1))
    for k in range(n + 1, n + 6):
        assert qpochhammer(q**-n, q, k) == 0


@given(st.lists(rationals(6), min_size=1, max_size=3), st.lists(rationals(6, nonzero=True), max_size=2),
       rationals(6), st.integers(0, 6))
def test_ordinary_matches_scalar_path(upper, lower, z, terms):
    assume(all(b + j != 0 for b in lower for j in range(terms)))
    got = hyper_sum(hyper(upper, lower, z, terms))
    assert got == Poly.const(scalar_hyper_sum(upper, lower, z, terms))


@given(st.lists(rationals(6), min_size=1, max_size=3), st.lists(rationals(6), max_size=2),
       rationals(4, nonzero=True), rationals(6), st.integers(0, 6))
def test_basic_matches_scalar_path(upper, lower, q, z, terms):
    assume(q not in (0, 1, -1))  # (q;q)_k vanishes at roots of unity
    assume(all(qpochhammer(b, q, terms) != 0 for b in lower))
    got = hyper_sum(qhyper(upper, lower, q, z, terms))
    assert got == Poly.const(scalar_hyper_sum(upper, lower, z, terms, q))


@given(st.lists(rationals(6), min_size=0, max_size=2), rationals(4, nonzero=True), rationals(6))
def test_negative_balance_exponent(upper, q, z):
    # 2phi0: the extra factor carries exponent 1 + 0 - 2 = -1
    assume(q not in (0, 1, -1))  # (q;q)_k vanishes at roots of unity
    ups = [q**-3, *upper][:2] if len(upper) < 2 else [q**-3, upper[0]]
    assume(len(ups) == 2)
    got = hyper_sum(qhyper(ups, [], q, z, 3))
    assert got == Poly.const(scalar_hyper_sum(ups, [], z, 3, q))
