from pathlib import Path

import pytest

import coreideal

SPECS = Path(__file__).resolve().parents[2] / "specs"


@pytest.fixture(scope="module")
def ex41():
    return coreideal.load_spec(str(SPECS / "ex4_1.spec"))


def test_spec_loading(ex41):
    assert ex41.field_size == 2**16
    assert ex41.names == ["I", "J"]
    assert len(ex41.ideal().gens()) == 4
    assert "z^3" in str(ex41)


def test_ideal_arithmetic():
    s = coreideal.parse_spec("char = 3\nvars = x, y\nideal I = x, y\n")
    m = s.ideal()
    assert m**2 == s.make_ideal("x^2, x*y, y^2")
    assert (m**2 / m) == m
    assert (s.make_ideal("x") & s.make_ideal("y")) == s.make_ideal("x*y")
    assert m.contains(m * m)
    assert not (m * m).contains(m)


def test_reduction_numbers(ex41):
    i, j = ex41.ideal("I"), ex41.ideal("J")
    assert coreideal.reduction_number(j, i) == 2
    jg, r = coreideal.minimal_reduction(i, seed=4)
    assert r == 2
    assert coreideal.s_invariant(i, jg, seed=4) == 2


def test_kn_methods_agree():
    s = coreideal.parse_spec(
        "char = 2\next_degree = 1\nvars = x, y\nideal I = x, y\nideal J = x^2\n")
    k = coreideal.kn(s.ideal("J"), s.ideal("I"), 2, method="binomial")
    assert k == s.make_ideal("x^2, y^2")
    assert k == coreideal.kn(s.ideal("J"), s.ideal("I"), 2, method="bruteforce")


def test_core_ex41(ex41):
    expected = ex41.make_ideal(
        "x^2*z^2, y^2*z^2, x^4, y^4, x^3*y*z, x*y^3*z, x^2*y^2*z, x^2*y^3, x^3*y^2")
    assert coreideal.core(ex41.ideal(), seed=1) == expected


def test_run_report(ex41):
    rep = coreideal.run("check-conjecture", ex41, n=2, seed=1)
    assert rep["command"] == "check-conjecture"
    assert rep["verdicts"]["holds"] is True
    assert set(rep) >= {"ring", "ideal", "seed", "field_size", "results", "genericity_log"}
    assert "check-stabilization" in coreideal.commands


def test_errors(ex41):
    with pytest.raises(coreideal.ParseError):
        coreideal.parse_spec("char = 4\nvars = x\n")
    with pytest.raises(coreideal.AlgebraError):
        coreideal.reduction_number(ex41.make_ideal("x"), ex41.ideal())
    with pytest.raises(coreideal.Error):
        coreideal.run("kn", ex41, n=2, method="nope")
