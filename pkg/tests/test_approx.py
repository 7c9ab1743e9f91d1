from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pistair import (
    RV_PAGE102,
    DomainError,
    PrecisionExhaustedError,
    RangeError,
    RealEnclosure,
    RVConstants,
    continued_fraction,
    convergents,
    lemma4_bound,
    lemma4_derivation,
    measure_exponents,
    sieve,
    sondow_inequality_check,
    zeta2_enclosure,
    zeta2_exponent_report,
)


def exact(p, q=1):
    r = Fraction(p, q)
    return RealEnclosure(r, r)


class TestContinuedFraction:
    def test_exact_three_halves(self):
        assert continued_fraction(exact(3, 2), 10) == [1, 2]

    def test_exact_one(self):
        assert continued_fraction(exact(1), 10) == [1]

    def test_zeta2_prefix(self):
        quotients = continued_fraction(zeta2_enclosure(50), 30)
        assert quotients[:5] == [1, 1, 1, 1, 4]
        # longer prefix frozen from a 60-digit Gauss-map oracle
        assert quotients[:14] == [1, 1, 1, 1, 4, 2, 4, 7, 1, 4, 2, 3, 4, 10]

    def test_immediate_disagreement_gives_empty(self):
        assert continued_fraction(RealEnclosure(Fraction(1), Fraction(2)), 10) == []

    def test_truncates_at_max_terms(self):
        assert continued_fraction(zeta2_enclosure(50), 3) == [1, 1, 1]

    def test_requires_positive(self):
        with pytest.raises(DomainError):
            continued_fraction(RealEnclosure(Fraction(-1), Fraction(1)), 5)

    @pytest.mark.parametrize("d", [30, 60, 120])
    def test_prefix_stable_under_refinement(self, d):
        coarse = continued_fraction(zeta2_enclosure(d), 500)
        fine = continued_fraction(zeta2_enclosure(2 * d), 500)
        assert fine[: len(coarse)] == coarse
        assert len(fine) > len(coarse)

    def test_every_emitted_quotient_correct_for_rational_probes(self):
        # any rational inside the enclosure must start with the same quotients
        enc = zeta2_enclosure(20)
        emitted = continued_fraction(enc, 50)
        probe = continued_fraction(exact(enc.midpoint), len(emitted))
        assert probe == emitted

    def test_against_live_gauss_map_oracle(self):
        # independent oracle: Gauss map run on an 80-digit mpmath value
        mp = pytest.importorskip("mpmath")
        mp.mp.dps = 80
        x = mp.mpf(mp.pi) ** 2 / 6
        oracle = []
        for _ in range(25):
            a = int(mp.floor(x))
            oracle.append(a)
            x = 1 / (x - a)
        assert continued_fraction(zeta2_enclosure(60), 25) == oracle


class TestConvergents:
    def test_single(self):
        records = convergents([1])
        assert (records[0].p, records[0].q) == (1, 1)

    def test_golden_prefix(self):
        records = convergents([1, 1, 1, 1])
        assert [(r.p, r.q) for r in records] == [(1, 1), (2, 1), (3, 2), (5, 3)]

    def test_zeta2_head(self):
        records = convergents([1, 1, 1, 1, 4])
        assert (records[-1].p, records[-1].q) == (23, 14)

    def test_rejects_nonpositive_inner_quotient(self):
        with pytest.raises(DomainError):
            convergents([1, 0, 3])
        with pytest.raises(DomainError):
            convergents([])

    def test_determinant_identity_on_zeta2(self):
        records = convergents(continued_fraction(zeta2_enclosure(120), 500))
        for k in range(1, len(records)):
            det = records[k].p * records[k - 1].q - records[k - 1].p * records[k].q
            assert det == (-1) ** (k - 1)

    @given(
        st.lists(st.integers(1, 10**6), min_size=1, max_size=25).map(
            lambda body: [abs(body[0]) - 1] + body[1:]
        )
    )
    @settings(max_examples=200, deadline=None)
    def test_determinant_identity_random(self, quotients):
        records = convergents(quotients)
        for k in range(1, len(records)):
            det = records[k].p * records[k - 1].q - records[k - 1].p * records[k].q
            assert det == (-1) ** (k - 1)
        qs = [r.q for r in records]
        assert all(a < b for a, b in zip(qs[1:], qs[2:]))


class TestMeasureExponents:
    def test_three_halves_matches_gap_report(self):
        # 3/2 is both a convergent and the N=3 Euler product
        enc = zeta2_enclosure(40)
        records = convergents([1, 1, 1])
        filled, best = measure_exponents(enc, records)
        three_halves = filled[-1]
        assert three_halves.exponent == pytest.approx(2.786531, abs=1e-5)
        assert best == pytest.approx(2.786531, abs=1e-5)

    def test_five_thirds_frozen_value(self):
        enc = zeta2_enclosure(40)
        filled, _ = measure_exponents(enc, convergents([1, 1, 1, 1]))
        assert filled[-1].q == 3
        assert filled[-1].exponent == pytest.approx(3.485253, abs=1e-5)

    def test_unit_denominators_skipped(self):
        filled, best = measure_exponents(zeta2_enclosure(20), convergents([1, 1]))
        assert all(r.exponent is None for r in filled)
        assert best is None

    def test_convergent_exponents_exceed_two(self):
        records, best = zeta2_exponent_report(10**6, digits=60)
        assert records
        assert all(r.exponent > 2 for r in records if r.q >= 2)
        assert best > 2

    def test_reproducible_across_precisions(self):
        first, _ = zeta2_exponent_report(10**6, digits=60)
        second, _ = zeta2_exponent_report(10**6, digits=120)
        assert len(first) == len(second)
        for a, b in zip(first, second):
            assert (a.p, a.q) == (b.p, b.q)
            assert a.exponent == pytest.approx(b.exponent, abs=1e-6)

    def test_unseparated_raises(self):
        enc = zeta2_enclosure(10)
        mid = enc.midpoint
        fake = [r for r in convergents([1, 2]) if r.q >= 2]
        wide = RealEnclosure(mid - Fraction(1, 10), mid + Fraction(1, 10))
        with pytest.raises(PrecisionExhaustedError):
            measure_exponents(wide, fake)


class TestLemma4:
    def test_raw_value(self):
        bound = lemma4_bound(RV_PAGE102, "raw")
        # exact arithmetic: 1 - b/a = 425342804/255306095
        assert bound == pytest.approx(425342804 / 255306095, abs=1e-12)
        assert bound < 2

    def test_shifted_value(self):
        assert lemma4_bound(RV_PAGE102, "shifted") == pytest.approx(7.690704, abs=1e-4)

    def test_zero_rho(self):
        assert lemma4_bound(RVConstants(a=-3.0, b=0.0), "raw") == 1.0

    def test_derivation_fields(self):
        derived = lemma4_derivation(RV_PAGE102, "raw")
        assert derived.rho == RV_PAGE102.b
        assert derived.sigma == -RV_PAGE102.a

    def test_sigma_domain_errors(self):
        with pytest.raises(DomainError):
            lemma4_bound(RVConstants(a=1.0, b=1.0), "raw")
        with pytest.raises(DomainError):
            lemma4_bound(RVConstants(a=-2.0, b=1.0), "shifted")
        with pytest.raises(DomainError):
            lemma4_bound(RV_PAGE102, "sideways")


class TestSondow:
    def test_small_cases(self, table3k):
        assert sondow_inequality_check(table3k, 1, 5.45).holds
        assert sondow_inequality_check(table3k, 2, 5.45).holds
        assert not sondow_inequality_check(table3k, 1, 0.5).holds

    def test_witness_fields(self, table3k):
        check = sondow_inequality_check(table3k, 2, 5.45)
        assert check.p_next == 5
        assert check.primorial == 6
        assert check.mu == Fraction(109, 20)

    def test_published_bound_through_fifteen(self, table3k):
        assert all(
            sondow_inequality_check(table3k, n, 5.45).holds for n in range(1, 16)
        )

    def test_table_too_small(self):
        tiny = sieve(10)
        with pytest.raises(RangeError):
            sondow_inequality_check(tiny, 4, 5.45)

    def test_mu_must_be_positive(self, table3k):
        with pytest.raises(DomainError):
            sondow_inequality_check(table3k, 1, 0)
