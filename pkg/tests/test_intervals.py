"""Containment properties of the outward-rounded interval arithmetic."""

import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicmai.intervals import LN2, LN3, Interval, IntervalError, xlogx

fractions = st.fractions(min_value=-100, max_value=100, max_denominator=10 ** 6)
positive_fractions = st.fractions(
    min_value=Fraction(1, 10 ** 6), max_value=100, max_denominator=10 ** 6)


def test_exact_and_from_fraction():
    assert Interval.exact(0.5) == Interval(0.5, 0.5)
    iv = Interval.from_fraction(Fraction(1, 3))
    assert iv.lo < iv.hi
    assert iv.contains(Fraction(1, 3))
    # representable rationals stay degenerate
    assert Interval.from_fraction(Fraction(3, 4)).width == 0.0


def test_from_decimal_covers_literal():
    iv = Interval.from_decimal("0.454")
    assert iv.contains(Fraction("0.454"))
    assert iv.width <= 2 * math.ulp(0.454)


def test_float_literals_rejected():
    with pytest.raises(TypeError):
        Interval.exact(1) + 0.1
    with pytest.raises(TypeError):
        Interval.exact(1) * 0.1


def test_inverted_and_nan_rejected():
    with pytest.raises(IntervalError):
        Interval(1.0, 0.0)
    with pytest.raises(IntervalError):
        Interval(math.nan, 1.0)


def test_division_by_zero_interval():
    with pytest.raises(IntervalError):
        Interval.exact(1) / Interval(-1.0, 1.0)


def test_log_edge_cases():
    assert Interval(0.0, 1.0).log().lo == -math.inf
    assert Interval(0.0, 0.0).log() == Interval(-math.inf, -math.inf)
    with pytest.raises(IntervalError):
        Interval(-1.0, 1.0).log()
    # exp round-trips the -inf convention
    assert Interval(-math.inf, 0.0).exp().lo == 0.0


def test_square_through_zero():
    iv = Interval(-2.0, 3.0).square()
    assert iv.lo == 0.0 and iv.contains(9)


def test_hull_and_intersect():
    a, b = Interval(0.0, 1.0), Interval(0.5, 2.0)
    assert Interval.hull(a, b) == Interval(0.0, 2.0)
    assert a.intersect(b) == Interval(0.5, 1.0)
    with pytest.raises(IntervalError):
        a.intersect(Interval(3.0, 4.0))


def test_xlogx_conventions():
    assert xlogx(Interval.exact(0)) == Interval(0.0, 0.0)
    # an interval crossing the minimizer 1/e must contain -1/e
    iv = xlogx(Interval(0.1, 0.9))
    assert iv.contains(-1.0 / math.e)
    # slightly-negative lower endpoint is only tolerated when flagged
    with pytest.raises(IntervalError):
        xlogx(Interval(-0.1, 0.5))
    clamped = xlogx(Interval(-1e-300, 0.5), nonneg=True)
    assert clamped.contains(0)


def test_named_constants():
    assert LN2.contains(Fraction(float(mpmath.log(2))))
    assert LN3.width < 1e-15
    with mpmath.workdps(40):
        assert LN3.lo < mpmath.log(3) < LN3.hi


@given(a=fractions, b=fractions)
@settings(max_examples=200)
def test_field_ops_contain_exact_result(a, b):
    ia, ib = Interval.from_fraction(a), Interval.from_fraction(b)
    assert (ia + ib).contains(a + b)
    assert (ia - ib).contains(a - b)
    assert (ia * ib).contains(a * b)
    if b != 0 and not (ib.lo <= 0.0 <= ib.hi):
        assert (ia / ib).contains(a / b)


@given(a=positive_fractions)
@settings(max_examples=200)
def test_transcendental_ops_contain_mpmath(a):
    ia = Interval.from_fraction(a)
    with mpmath.workdps(50):
        exact_sqrt = mpmath.sqrt(mpmath.mpf(a.numerator) / a.denominator)
        exact_log = mpmath.log(mpmath.mpf(a.numerator) / a.denominator)
        s = ia.sqrt()
        assert s.lo <= exact_sqrt <= s.hi
        lg = ia.log()
        assert lg.lo <= exact_log <= lg.hi
        xl = xlogx(ia)
        exact_xl = (mpmath.mpf(a.numerator) / a.denominator) * exact_log
        assert xl.lo <= exact_xl <= xl.hi


@given(a=st.fractions(min_value=-20, max_value=20, max_denominator=10 ** 4))
@settings(max_examples=100)
def test_exp_contains_mpmath(a):
    ia = Interval.from_fraction(a)
    with mpmath.workdps(50):
        exact = mpmath.exp(mpmath.mpf(a.numerator) / a.denominator)
        e = ia.exp()
        assert e.lo <= exact <= e.hi
