"""Exact MZV reductions and Drinfeld associator coefficients up to y-degree 2."""
from fractions import Fraction

from ._drinfeld import (
    MathError,
    ParseError,
    RangeError,
    canonical_word,
    coeff,
    coeff_json,
    reduce,
    shuffle,
    solve_cab,
    stuffle,
)
from . import _drinfeld


def _frac(pair):
    return Fraction(int(pair[0]), int(pair[1]))


def I1(n):
    return _frac(_drinfeld.I1(n))


def J1(n):
    return _frac(_drinfeld.J1(n))


def J2(l, m):
    return _frac(_drinfeld.J2(l, m))


__all__ = [
    "MathError", "ParseError", "RangeError", "canonical_word", "coeff", "coeff_json",
    "reduce", "shuffle", "solve_cab", "stuffle", "I1", "J1", "J2",
]
