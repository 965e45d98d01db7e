from fractions import Fraction

import pytest

import orbitverdict as ov

CONTRACTION = {"blocks": [{"lambda": "1/2", "size": 1}], "x": [["0"]], "c": [["1"]]}
CHAIN = {
    "blocks": [{"lambda": "2", "size": 2}],
    "x": [["0", "0"]],
    "c": [["0", "1"]],
}


def test_classify_iterates():
    report = ov.classify_iterates(CONTRACTION)
    assert report["verdict"]["kind"] == "ConvergesToConstant"
    assert report["verdict"]["limit"] == [["2"]]
    assert report["closed_form_check"]["agrees"]


def test_classify_averages_and_fixed_point():
    assert ov.classify_averages(CHAIN)["verdict"]["kind"] == "DivergesToInfinity"
    fixed = ov.fixed_point(CHAIN)
    assert fixed["fixed_point"] == [["1", "-1"]]
    assert fixed["check"]["holds"]
    at_fixed = dict(CHAIN, x=fixed["fixed_point"])
    assert ov.classify_averages(at_fixed)["verdict"]["kind"] == "ConvergesToConstant"


def test_closed_form_and_oracle():
    report = ov.closed_form(CHAIN, 12)
    assert report["oracle_check"]["agrees"]
    assert ov.oracle(CHAIN, 30)["agrees"]


def test_errors_carry_the_exit_code():
    with pytest.raises(ov.OrbitVerdictError) as info:
        ov.classify_iterates({"blocks": [{"lambda": "2", "size": 1}], "extra": 1})
    assert info.value.code == 1
    assert "extra: unknown field" in str(info.value)
    with pytest.raises(ov.OrbitVerdictError):
        ov.closed_form(CHAIN, 1)


def test_identities_and_gallery():
    sweep = ov.verify_identities(max_k=12, max_j=4, trials=2, seed=3)
    assert sweep["all_pass"]
    assert len(sweep["table"]) == 10
    assert ov.gallery("example2")["check"]["holds"]
    assert ov.gallery("example1")["tends_to_infinity"][0]["norm"] == "2"


def test_scalar_functions():
    assert ov.binom(10, 3) == 120
    assert ov.binom(60, 30) == 118264581564861424
    assert ov.s_sum(1, 5, 1) == 10
    assert ov.d_factor(10, 0, Fraction(1, 2)) == ov.d_factor(10, 0, "1/2")
    value = ov.t_sum(2, 9, (0, 1))
    assert isinstance(value, (Fraction, tuple))
    with pytest.raises(TypeError):
        ov.s_sum(1, 5, 1j)
