import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pistair import (
    DomainError,
    Placement,
    RealEnclosure,
    ResourceLimitError,
    as_rational,
    enclosure_compare,
    exp_taylor_enclosure,
    rational_exp_upper,
    rational_str,
    zeta2_enclosure,
)


def partial_sum(n):
    return sum(Fraction(1, k * k) for k in range(1, n + 1))


# Exact rational sandwich: S_N + 1/(N+1) < zeta(2) < S_N + 1/N.  This is the
# independent oracle every enclosure is checked against.
S1000 = partial_sum(1000)
SANDWICH_LO = S1000 + Fraction(1, 1001)
SANDWICH_HI = S1000 + Fraction(1, 1000)


class TestRealEnclosure:
    def test_orders_endpoints(self):
        with pytest.raises(DomainError):
            RealEnclosure(Fraction(2), Fraction(1))

    def test_width_and_midpoint(self):
        enc = RealEnclosure(Fraction(3, 2), Fraction(5, 3))
        assert enc.width == Fraction(1, 6)
        assert enc.midpoint == Fraction(19, 12)

    def test_abs_distance_requires_separation(self):
        enc = RealEnclosure(Fraction(3, 2), Fraction(5, 3))
        assert enc.abs_distance_to(Fraction(1)).lo == Fraction(1, 2)
        assert enc.abs_distance_to(Fraction(2)).lo == Fraction(1, 3)
        with pytest.raises(DomainError):
            enc.abs_distance_to(Fraction(8, 5))


class TestEnclosureCompare:
    def test_below(self):
        enc = RealEnclosure(Fraction(3, 2), Fraction(5, 3))
        assert enclosure_compare(enc, 1) is Placement.BELOW

    def test_above(self):
        enc = RealEnclosure(Fraction(3, 2), Fraction(5, 3))
        assert enclosure_compare(enc, 2) is Placement.ABOVE

    def test_overlapping(self):
        enc = RealEnclosure(Fraction(3, 2), Fraction(5, 3))
        assert enclosure_compare(enc, Fraction(8, 5)) is Placement.OVERLAPPING


class TestZeta2Enclosure:
    def test_two_digit_request(self):
        enc = zeta2_enclosure(2)
        assert enc.width <= Fraction(1, 100)
        assert enc.lo >= Fraction(164, 100)
        assert enc.hi <= Fraction(165, 100)

    def test_one_digit_contains_true_value(self):
        enc = zeta2_enclosure(1)
        # the sandwich pins zeta(2) inside (SANDWICH_LO, SANDWICH_HI)
        assert enc.lo <= SANDWICH_HI and SANDWICH_LO <= enc.hi

    def test_sandwich_consistency(self):
        enc = zeta2_enclosure(30)
        assert SANDWICH_LO < enc.hi
        assert SANDWICH_HI > enc.lo
        assert SANDWICH_LO < enc.lo and enc.hi < SANDWICH_HI

    @pytest.mark.parametrize("digits", [1, 5, 15, 40])
    def test_refinement_nests(self, digits):
        coarse = zeta2_enclosure(digits)
        fine = zeta2_enclosure(digits + 10)
        assert coarse.contains_enclosure(fine)
        assert coarse.width <= Fraction(1, 10**digits)

    def test_rejects_bad_digits(self):
        with pytest.raises(DomainError):
            zeta2_enclosure(0)

    def test_digit_cap(self, monkeypatch):
        monkeypatch.setenv("PISTAIR_DIGIT_CAP", "50")
        with pytest.raises(ResourceLimitError):
            zeta2_enclosure(51)


class TestRationalExpUpper:
    def test_zero(self):
        assert rational_exp_upper(0) == 1

    def test_half(self):
        assert rational_exp_upper(Fraction(1, 2)) == Fraction(7, 4)
        # exp(1/2) = 1.6487... <= 7/4 against the independent Taylor oracle
        assert exp_taylor_enclosure(Fraction(1, 2)).hi <= Fraction(7, 4)

    def test_one(self):
        assert rational_exp_upper(1) == 3
        assert exp_taylor_enclosure(1).hi <= 3

    def test_domain(self):
        with pytest.raises(DomainError):
            rational_exp_upper(Fraction(-1, 10))
        with pytest.raises(DomainError):
            rational_exp_upper(Fraction(11, 10))

    @given(st.fractions(min_value=0, max_value=1))
    @settings(max_examples=150, deadline=None)
    def test_dominates_exp(self, x):
        upper = rational_exp_upper(x)
        oracle = exp_taylor_enclosure(x)
        assert oracle.lo <= upper
        assert upper <= 1 + x + x * x

    def test_monotone(self):
        values = [rational_exp_upper(Fraction(k, 20)) for k in range(21)]
        assert all(a <= b for a, b in zip(values, values[1:]))


def test_as_rational_float_uses_decimal_repr():
    assert as_rational(5.45) == Fraction(109, 20)
    assert as_rational("3/7") == Fraction(3, 7)
    assert rational_str(Fraction(3)) == "3/1"


def test_taylor_oracle_brackets_known_values():
    # widen the oracle beyond float precision before comparing with float e
    enc = exp_taylor_enclosure(1, terms=10)
    e = Fraction(math.e)
    assert enc.lo < e < enc.hi
    assert exp_taylor_enclosure(1).width < Fraction(1, 10**25)
