from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cantorval.central import CentralCantor, SequenceSpec
from cantorval.digitset import DigitSet
from cantorval.numerics import Interval, IntervalUnion
from cantorval.scantor import SCantorParams

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def unit_fractions(max_den=24):
    """Rationals strictly inside (0, 1)."""
    return st.integers(2, max_den).flatmap(
        lambda q: st.integers(1, q - 1).map(lambda k: Fraction(k, q)))


def rationals(lo=-4, hi=4, max_den=12):
    return st.builds(lambda n, q: Fraction(n, q), st.integers(lo * max_den, hi * max_den), st.integers(1, max_den)) \
        .filter(lambda x: lo <= x <= hi)


@st.composite
def intervals(draw, lo=-4, hi=4):
    a, b = draw(rationals(lo, hi)), draw(rationals(lo, hi))
    return Interval(min(a, b), max(a, b))


@st.composite
def unions(draw, max_parts=4):
    return IntervalUnion(draw(st.lists(intervals(), min_size=1, max_size=max_parts)))


@st.composite
def sequence_specs(draw, max_prefix=2, max_cycle=3, periodic=True):
    prefix = tuple(draw(st.lists(unit_fractions(), max_size=max_prefix)))
    cycle_min = 1 if periodic else 0
    cycle = tuple(draw(st.lists(unit_fractions(), min_size=cycle_min, max_size=max_cycle)))
    if not prefix and not cycle:
        cycle = (draw(unit_fractions()),)
    return SequenceSpec(prefix, cycle)


def central_sets(**kw):
    return sequence_specs(**kw).map(CentralCantor)


@st.composite
def digit_sets(draw, p_max=7, signed=True):
    p = draw(st.integers(2, p_max))
    lo = -p + 1 if signed else 0
    digits = draw(st.lists(st.integers(lo, p - 1), min_size=1, max_size=2 * p - 1, unique=True))
    return DigitSet(p, tuple(digits))


@st.composite
def signed_digit_sets(draw, p_max=7):
    """Digit sets containing ``-p+1, 0, p-1``."""
    p = draw(st.integers(3, p_max))
    extra = draw(st.lists(st.integers(-p + 1, p - 1), max_size=2 * p - 1, unique=True))
    return DigitSet(p, tuple(extra) + (-p + 1, 0, p - 1))


@st.composite
def scantor_pairs(draw, p_max=12):
    p = draw(st.integers(3, p_max))

    def params():
        l = draw(st.integers(1, p - 2))
        r = draw(st.integers(1, p - 1 - l))
        return SCantorParams(l, r, p)

    return params(), params()


@pytest.fixture
def cantor3():
    return DigitSet(3, (0, 2))
