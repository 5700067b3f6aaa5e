from __future__ import annotations

import random
from fractions import Fraction

import pytest

from lcpoly.characterization import (NoPearsonPolynomial, check_lc_membership, check_parameter_sode,
                                     check_structure_relation, check_sturm_liouville, pearson_branches,
                                     structure_relation_sides, sturm_liouville_sides, lc_equivalence)
from lcpoly.construction import by_recurrence, by_rodrigues, by_series, cross_check, has_rodrigues
from lcpoly.families import FamilyId, ParamPoint, family_poly, get_family, sample_params
from lcpoly.identities.laguerre import prop1_composition_holds

F = Fraction


def _points(fam, count=5, seed=3):
    rng = random.Random(f"{seed}:{fam}")
    return [sample_params(fam, rng) for _ in range(count)]


def test_lc_examples():
    r = check_lc_membership("L", ParamPoint(alpha=1), 20)
    assert r.ok and r.detail["constant"] == "0"
    r = check_lc_membership("bqL", ParamPoint(a=F(1, 3), b=F(1, 5), q=2), 20)
    assert r.ok and r.detail["constant"] == "1" and r.detail["root"] == "1"


def test_lc_negative_control():
    br = get_family("L").main
    bumped = lambda n, th: br.gamma(n, th) + (1 if n >= 1 else 0)
    r = check_lc_membership("L", ParamPoint(alpha=1), 20, gamma=bumped)
    assert not r.ok
    assert r.detail["first_failure"]["n"] == 1


def test_lc_negative_control_at_zero():
    br = get_family("C").main
    r = check_lc_membership("C", ParamPoint(a=2), 20, gamma=lambda n, th: br.gamma(n, th) + 1)
    assert not r.ok and r.detail["first_failure"]["n"] == 0


@pytest.mark.parametrize("fam", list(FamilyId), ids=str)
def test_lc_all_families(fam):
    for th in _points(fam):
        for br in get_family(fam).branches:
            assert check_lc_membership(fam, th, 20, br.label).ok


def test_structure_relation_examples():
    assert check_structure_relation("L", 0, ParamPoint(alpha=F(1, 2))).ok
    assert check_structure_relation("C", 3, ParamPoint(a=2)).ok
    assert check_structure_relation("M", 2, ParamPoint(beta=3, c=F(1, 2)), "c2=-beta").ok


def test_sturm_liouville_examples():
    assert check_sturm_liouville("L", 1, ParamPoint(alpha=0), "SL1").ok
    assert check_sturm_liouville("C", 2, ParamPoint(a=3), "SL2").ok


def test_printed_sturm_liouville_forms_fail():
    r = check_sturm_liouville("C", 2, ParamPoint(a=3), "SL1", printed=True)
    assert not r.ok and "residual_poly" in r.detail
    assert not check_sturm_liouville("L", 1, ParamPoint(alpha=F(1, 3)), "SL2", printed=True).ok


def test_unknown_sl_form():
    with pytest.raises(ValueError):
        sturm_liouville_sides("L", 1, ParamPoint(alpha=0), "SL3")


def test_no_pearson_polynomial():
    with pytest.raises(NoPearsonPolynomial):
        structure_relation_sides("qM", 1, ParamPoint(b=F(1, 3), c=F(1, 5), q=2))


def test_pearson_branches():
    assert [(f.value, b) for f, b in pearson_branches()] == [
        ("L", "c=0"), ("C", "c=0"), ("M", "c1=0"), ("M", "c2=-beta"), ("bqL", "c=1"), ("lqL", "c=0"),
        ("SW", "c=0")]


@pytest.mark.parametrize("fam,branch", pearson_branches(), ids=lambda v: str(v))
def test_lc_equivalence(fam, branch):
    for th in _points(fam):
        out = lc_equivalence(fam, th, 10, branch)
        assert out["equivalent"] and out["lc_membership"], out


@pytest.mark.parametrize("fam,branch", pearson_branches(), ids=lambda v: str(v))
def test_sl_forms_agree(fam, branch):
    th = _points(fam, 1)[0]
    for n in range(6):
        _, r1 = sturm_liouville_sides(fam, n, th, "SL1", branch)
        _, r2 = sturm_liouville_sides(fam, n, th, "SL2", branch)
        _, r0 = structure_relation_sides(fam, n, th, branch)
        assert r1 - r2 == r0 - r1 == 0 * r0


def test_parameter_sode_examples():
    r = check_parameter_sode("sodeL1", 0, ParamPoint(alpha=F(2, 5)))
    assert r.ok
    assert check_parameter_sode("sodeL1", 2, ParamPoint(alpha=F(1, 3))).ok
    r = check_parameter_sode("sodelqL1", 1, ParamPoint(a=F(1, 3), q=2))
    assert r.detail["printed"] == "fail" and r.detail["corrected"] == "pass"


@pytest.mark.parametrize("name", ["sodeL2", "sodeM"])
def test_parameter_sodes_that_hold(name):
    fam = "L" if name.startswith("sodeL") else "M"
    for th in _points(fam, 2):
        for n in range(5):
            assert check_parameter_sode(name, n, th).ok


@pytest.mark.parametrize("name", ["sodeM1", "sodeM2", "sodelqL2"])
def test_parameter_sodes_corrected(name):
    fam = "bqL" if name.startswith("sodeM") else "lqL"
    for th in _points(fam, 2):
        for n in range(1, 5):
            try:
                r = check_parameter_sode(name, n, th)
            except ZeroDivisionError:
                continue
            assert r.detail["corrected"] == "pass"


@pytest.mark.parametrize("fam", list(FamilyId), ids=str)
def test_series_vs_recurrence(fam):
    for th in _points(fam):
        for br in get_family(fam).branches:
            for n in range(11):
                assert by_series(fam, n, th, br.label) == by_recurrence(fam, n, th, br.label)


@pytest.mark.parametrize("fam", ["L", "C", "M", "bqL", "SW"])
def test_rodrigues_step_construction(fam):
    assert has_rodrigues(fam)
    for th in _points(fam, 3):
        for n in range(9):
            try:
                rod = by_rodrigues(fam, n, th)
            except ZeroDivisionError:
                continue
            assert rod == family_poly(fam, n, th), (n, th)
            assert all(cross_check(fam, n, th).values())


def test_no_rodrigues_for_q_meixner():
    assert not has_rodrigues("qM")
    assert by_rodrigues("qM", 2, ParamPoint(b=F(1, 3), c=F(1, 5), q=2)) is None


def test_prop1_composition():
    assert prop1_composition_holds(F(1, 3))
    assert prop1_composition_holds(F(-5, 2))
