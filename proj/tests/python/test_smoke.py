from fractions import Fraction

import pytest

import sgp


def test_tverberg_and_clause_c():
    assert sgp.tverberg_number(2, 3) == 7
    assert sgp.clause_c_applicable(4, 3, 9)
    assert not sgp.clause_c_applicable(4, 3, 11)


def test_hexagon():
    hexagon = sgp.gen_hexagon_counterexample()
    assert hexagon[3] == [-hexagon[0][0], -hexagon[0][1]]
    assert sgp.general_position(hexagon)["general_position"]
    verdict = sgp.check(hexagon, mode="both")
    assert verdict["agree"]
    assert verdict["reduced"]["status"] == "violation"
    assert sgp.intersection_dim(hexagon, [[1, 4], [2, 5], [3, 6]]) == 0
    cert = sgp.certify(hexagon, [[1, 4], [2, 5], [3, 6]])
    assert cert["case"] == "II"
    assert cert["P"] == 0
    assert cert["rank_A_minus"] == 5


def test_rational_input_and_certificate():
    kite = [[0, 0], [1, 0], [0, 1], [2, 3]]
    assert sgp.check(kite) == {"status": "sgp"}
    cert = sgp.certify(kite, [[1, 2], [3, 4]])
    assert cert["det_A"] == -2
    assert cert["point"] == [-1, 0]
    halves = [[Fraction(1, 2), "0"], ["1/3", 1], [0, Fraction(-5, 7)]]
    assert sgp.check(halves)["status"] == "sgp"


def test_counts_and_generators():
    counts = sgp.count_conditions(6, 2)
    assert (counts["A"], counts["B"], counts["C"]) == (45, 15, 0)
    assert sgp.count_conditions(3, 2, naive=True)["naive"] == 14
    assert sgp.gen_moment_curve(2, [1, 2, Fraction(3, 2)]) == [[1, 1], [2, 4], [Fraction(3, 2), Fraction(9, 4)]]
    assert sgp.gen_random_rational(3, 5, 11, 4) == sgp.gen_random_rational(3, 5, 11, 4)


def test_errors():
    with pytest.raises(TypeError):
        sgp.check([[0.5, 1]])
    with pytest.raises(ValueError):
        sgp.check({"dim": 2, "points": [[1]]})
    with pytest.raises(sgp.OracleBoundError):
        sgp.check(sgp.gen_random_rational(2, 10, 1, 5), mode="naive")
    with pytest.raises(sgp.OracleBoundError):
        sgp.count_conditions(10, 2, naive=True)
