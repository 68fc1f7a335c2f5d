import json
from fractions import Fraction
from math import factorial

import pytest

import drinfeld


def test_theorem_values():
    assert drinfeld.coeff("half", "x^2yx^4y") == "(2ζ(3,5)-7ζ(3)ζ(5))/(512π^8)"
    assert drinfeld.coeff("at", "x^2yx^4y") == "(2048ζ(3,5)-6293ζ(3)ζ(5))/(524288π^8)"


def test_reduce_and_products():
    assert drinfeld.reduce("4,2") == "ζ(3)^2 - 32/105 ζ(2)^3"
    assert drinfeld.reduce("2,1") == "ζ(3)"
    assert drinfeld.shuffle("xy", "xy") == "4 x^2y^2 + 2 xyxy"
    assert drinfeld.stuffle("2,3", "5").count("(") == 5


def test_integrals():
    for n in range(1, 6):
        i1 = Fraction(factorial(2 * n) ** 2, factorial(4 * n + 1))
        assert drinfeld.I1(n) == i1
        assert drinfeld.J1(n) == i1 / 2
    assert drinfeld.J2(2, 1) == Fraction(1199, 154828800)
    assert drinfeld.J2(1, 2) == Fraction(283, 51609600)


def test_json_record():
    rec = json.loads(drinfeld.coeff_json("kz", "x^2y"))
    assert rec["rendered"] == "-ζ(3)/(2πi)^3"
    assert rec["terms"] == [{"rational": "-1", "atoms": ["z3"], "twoPiIPower": 3}]


def test_cab_solution():
    sol = drinfeld.solve_cab(2)
    assert sol["c2n"] == "1260ζ(5)/(2πi)^5"
    assert set(sol["cab"]) == {(0, 3), (1, 2)}
    assert sol["equations"] == 10


def test_errors():
    with pytest.raises(ValueError):
        drinfeld.canonical_word("x^0y")
    with pytest.raises(IndexError):
        drinfeld.coeff("kz", "x^9y")
