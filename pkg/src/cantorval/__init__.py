"""Exact topology of differences of Cantor sets.

Two families are covered: central Cantor sets given by eventually periodic
ratio sequences, and S-Cantor sets ``C(l, r, p)`` defined by base-``p`` digit
sets. Each has an exact classifier, and :mod:`cantorval.oracle` checks the
verdicts by brute force.
"""
from .numerics import Interval, IntervalUnion, Rational, parse_rational
from .central import CentralCantor, CentralVerdict, CentralVerdictKind, SequenceSpec
from .digitset import DigitSet
from .scantor import SCantorParams, TopologyClass

__all__ = [
    "CentralCantor",
    "CentralVerdict",
    "CentralVerdictKind",
    "DigitSet",
    "Interval",
    "IntervalUnion",
    "Rational",
    "SCantorParams",
    "SequenceSpec",
    "TopologyClass",
    "parse_rational",
]

__version__ = "0.1.0"
