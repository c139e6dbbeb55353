import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cantorval import oracle
from cantorval.digitset import (DigitSet, ds_diff, ds_scale, ds_sum, int_range, is_full_difference,
                                is_interval, stats)
from cantorval.numerics import Interval
from cantorval.scantor import SCantorParams, digit_set_of

from conftest import digit_sets


def D(p, *digits):
    return DigitSet(p, digits)


class TestDigitSet:
    def test_sorted_and_deduplicated(self):
        assert D(5, 3, 0, 3, -1).digits == (-1, 0, 3)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            DigitSet(3, ())

    def test_parse_and_print(self):
        text = "p=7:{-6,-5,-4,-1,0,1,4,5,6}"
        ds = DigitSet.parse(text)
        assert ds.base == 7 and len(ds) == 9
        assert str(ds) == text
        assert DigitSet.parse(" p = 3 : { 2, 0 } ") == D(3, 0, 2)

    @pytest.mark.parametrize("bad", ["7:{1}", "p=7:{}", "p=7:{a}", "p=1:{0}"])
    def test_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            DigitSet.parse(bad)

    def test_hull(self):
        assert D(3, 0, 2).hull == Interval(0, 1)
        assert D(7, -6, 2).hull == Interval(-1, F(1, 3))

    def test_bounds(self):
        assert not D(3, 0, 3).in_range
        with pytest.raises(ValueError):
            D(3, -3, 0).require_bounded()

    def test_int_range_empty(self):
        assert list(int_range(3, 2)) == []


class TestArithmetic:
    def test_cantor_difference(self):
        assert ds_diff(D(3, 0, 2), D(3, 0, 2)) == D(3, -2, 0, 2)

    def test_scantor_difference(self):
        a, b = digit_set_of(SCantorParams(1, 1, 4)), digit_set_of(SCantorParams(2, 1, 4))
        expected = {x - y for x in (0, 3) for y in (0, 1, 3)}
        assert set(ds_diff(a, b).digits) == expected == {-3, -1, 0, 2, 3}

    def test_scale_identity(self):
        a = D(5, 0, 1, 4)
        assert ds_scale(1, a) == a
        assert ds_scale(-1, a) == D(5, -4, -1, 0)

    def test_base_mismatch(self):
        with pytest.raises(ValueError):
            ds_sum(D(3, 0), D(4, 0))

    def test_out_of_window_flagged(self):
        with pytest.warns(UserWarning):
            ds_diff(D(3, 2), D(3, -2))

    def test_sum_may_leave_window(self):
        assert ds_sum(D(3, 0, 2), D(3, 0, 2)) == D(3, 0, 2, 4)

    @settings(max_examples=40)
    @given(st.integers(2, 6).flatmap(lambda p: st.tuples(
        st.just(p),
        st.lists(st.integers(0, p - 1), min_size=1, unique=True),
        st.lists(st.integers(0, p - 1), min_size=1, unique=True))), st.integers(0, 4))
    def test_homomorphism_at_finite_depth(self, data, n):
        p, xs, ys = data
        a, b = DigitSet(p, tuple(xs)), DigitSet(p, tuple(ys))
        pa, pb = oracle.prefixes(a, n).ks, oracle.prefixes(b, n).ks
        diff = oracle.prefixes(ds_diff(a, b), n).ks
        assert set(diff) == {x - y for x in pa for y in pb}


class TestStats:
    def test_cantor(self):
        assert tuple(stats(D(3, 0, 2))) == (2, 2, F(1, 2))

    def test_m_cantorval_digits(self):
        assert tuple(stats(DigitSet.parse("p=7:{-6,-5,-4,-1,0,1,4,5,6}"))) == (12, 3, F(1, 5))

    @pytest.mark.parametrize("p", range(2, 9))
    def test_full(self, p):
        s = stats(DigitSet.full(p))
        assert s.delta == 1 and s.ratio == F(1, p)

    def test_singleton(self):
        with pytest.raises(ValueError):
            stats(D(5, 2))


class TestIsInterval:
    def test_examples(self):
        assert is_interval(D(3, 0, 1, 2))
        assert not is_interval(D(3, 0, 2))
        assert is_interval(D(3, -2, 0, 2))

    def test_singleton_is_not(self):
        with pytest.warns(UserWarning):
            assert not is_interval(D(4, 1))

    @given(digit_sets(p_max=6))
    def test_matches_depth_one_cover(self, ds):
        if len(ds) >= 2:
            assert is_interval(ds) == oracle.cover(ds, 1).is_connected()


class TestFullDifference:
    def test_cantor(self):
        assert is_full_difference(D(3, 0, 2), D(3, 0, 2))

    def test_cantor_base_four(self):
        a = digit_set_of(SCantorParams(1, 1, 4))
        assert ds_diff(a, a) == D(4, -3, 0, 3)
        assert not is_full_difference(a, a)

    @pytest.mark.parametrize("p", range(2, 8))
    def test_full(self, p):
        assert is_full_difference(DigitSet.full(p), DigitSet.full(p))

    def test_preconditions(self):
        with pytest.raises(ValueError):
            is_full_difference(D(3, 0, 1), D(3, 0, 2))
        with pytest.raises(ValueError):
            is_full_difference(D(3, -1, 2), D(3, 0, 2))

    def test_agrees_with_is_interval(self):
        for p in range(3, 7):
            inner = list(range(1, p - 1))
            for k in range(len(inner) + 1):
                for mid in itertools.combinations(inner, k):
                    a = DigitSet(p, (0, p - 1) + mid)
                    assert is_full_difference(a, a) == is_interval(ds_diff(a, a))


class TestCantorSignature:
    @pytest.mark.parametrize("p", [3, 4, 5])
    def test_proper_subsets_have_gaps_and_no_isolated_prefixes(self, p):
        full = set(range(p))
        for k in range(2, p):
            for digits in itertools.combinations(range(p), k):
                ds = DigitSet(p, digits)
                assert set(digits) != full
                gaps = [oracle.cover(ds, n).n_gaps for n in range(1, 6)]
                assert all(g > 0 for g in gaps)
                # every depth-n prefix branches into at least two depth-(n+1) prefixes
                for n in range(4):
                    nxt = set(oracle.prefixes(ds, n + 1).ks)
                    for c in oracle.prefixes(ds, n).ks:
                        assert sum(p * c + d in nxt for d in ds.digits) >= 2
