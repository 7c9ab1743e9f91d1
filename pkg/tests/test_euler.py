from fractions import Fraction

import pytest

from pistair import (
    DomainError,
    RangeError,
    ResourceLimitError,
    approximation_gap,
    euler_product,
    prime_count,
    qn_bound_report,
    rational_exp_upper,
    sieve,
    tail_product_upper,
    zeta2_enclosure,
)


def brute_force_product(primes, N):
    num = den = 1
    for p in primes:
        if p > N:
            break
        num *= p * p
        den *= p * p - 1
    return Fraction(num, den)


class TestEulerProduct:
    def test_empty_product(self, table3k):
        assert euler_product(table3k, 1).value == Fraction(1)

    def test_small_cases(self, table3k):
        assert euler_product(table3k, 3).value == Fraction(3, 2)
        assert euler_product(table3k, 5).value == Fraction(25, 16)
        assert euler_product(table3k, 10).value == Fraction(1225, 768)

    def test_q_digits(self, table3k):
        assert euler_product(table3k, 10).q_digits == 3

    def test_brute_force_agreement(self, table3k):
        primes = table3k.primes.tolist()
        for N in range(1, 301):
            assert euler_product(table3k, N).value == brute_force_product(primes, N)

    def test_incremental_identity(self, table3k):
        # value changes by exactly p^2/(p^2-1) at primes, else not at all
        previous = euler_product(table3k, 1).value
        prime_set = set(table3k.primes.tolist())
        for N in range(2, 501):
            current = euler_product(table3k, N).value
            if N in prime_set:
                assert current == previous * Fraction(N * N, N * N - 1)
                assert current > previous
            else:
                assert current == previous
            previous = current

    def test_monotone_below_zeta2(self):
        t = sieve(10_000)
        limit = zeta2_enclosure(30).lo
        previous = Fraction(0)
        for p in t.primes.tolist():
            value = euler_product(t, p).value
            assert previous < value < limit
            previous = value
        assert euler_product(t, 10_000).value < limit

    def test_range_error(self, table3k):
        with pytest.raises(RangeError):
            euler_product(table3k, 3001)

    def test_cache_boundary_and_descending_queries(self, monkeypatch):
        # force the dense/cursor boundary low and hit it from both sides
        from pistair import euler as euler_module

        monkeypatch.setattr(euler_module, "_DENSE_PRIME_COUNT", 5)
        t = sieve(200)
        primes = t.primes.tolist()
        expected = {N: brute_force_product(primes, N) for N in range(1, 101)}
        for N in (100, 40, 13, 60, 100, 7, 99):
            assert euler_product(t, N).value == expected[N]

    def test_gap_against_live_high_precision_oracle(self, table3k):
        # independent oracle: mpmath at 60 significant digits
        mp = pytest.importorskip("mpmath")
        mp.mp.dps = 60
        z2 = mp.mpf(mp.pi) ** 2 / 6
        for N in (2, 3, 10, 50):
            report = approximation_gap(table3k, N, 30)
            v = report.value
            oracle_gap = abs(z2 - mp.mpf(v.numerator) / mp.mpf(v.denominator))
            assert float(report.gap.midpoint) == pytest.approx(
                float(oracle_gap), rel=1e-12
            )
            if report.q >= 2:
                oracle_exp = float(-mp.log(oracle_gap) / mp.log(report.q))
                assert report.exponent == pytest.approx(oracle_exp, abs=1e-9)


class TestQnBounds:
    def test_n_equals_2(self, table3k):
        rep = qn_bound_report(table3k, 2)
        assert (rep.q, rep.prod_p2_minus_1, rep.n_pow_2pi, rep.factorial_sq) == (3, 3, 4, 4)
        assert rep.chain_ok and rep.factorial_ok and rep.q_divides_prod

    def test_n_equals_5(self, table3k):
        rep = qn_bound_report(table3k, 5)
        assert (rep.q, rep.prod_p2_minus_1, rep.n_pow_2pi, rep.factorial_sq) == (
            16,
            576,
            15625,
            14400,
        )
        assert rep.chain_ok and rep.factorial_ok and rep.q_divides_prod

    def test_n_equals_1_trivial_chain(self, table3k):
        rep = qn_bound_report(table3k, 1)
        assert rep.q == 1
        assert rep.chain_ok and rep.factorial_ok and rep.q_divides_prod

    def test_divisibility_sweep(self, table3k):
        for N in range(2, 201):
            rep = qn_bound_report(table3k, N)
            assert rep.q_divides_prod
            assert rep.chain_ok and rep.factorial_ok

    def test_q_divides_product_to_2000(self, table3k):
        # direct incremental check, no factorials needed
        prod = 1
        for p in table3k.primes.tolist():
            if p > 2000:
                break
            prod *= p * p - 1
            q = euler_product(table3k, p).value.denominator
            assert prod % q == 0

    def test_factorial_cap(self, table3k, monkeypatch):
        monkeypatch.setenv("PISTAIR_FACTORIAL_CAP", "100")
        with pytest.raises(ResourceLimitError):
            qn_bound_report(table3k, 101)


class TestTailProductUpper:
    def test_coarse_bound_at_10(self):
        assert tail_product_upper(10) <= 1

    def test_paper_scale_at_1000(self):
        assert tail_product_upper(1000) <= Fraction(1, 100)

    def test_sharper_chain_at_100(self):
        u = tail_product_upper(100)
        assert u <= Fraction(10, 100)
        assert u >= Fraction(164, 10000)  # (pi^2/6)/100 = 0.01644...

    def test_never_exceeds_coarse(self):
        for f in (2, 3, 10, 50, 1000, 10**6):
            assert tail_product_upper(f) <= Fraction(10, f)

    def test_domain(self):
        with pytest.raises(DomainError):
            tail_product_upper(Fraction(3, 2))

    def test_bounds_true_gap_over_prime_free_interval(self, table3k):
        # (23, 28] and (199, 210] contain no prime, so the chain hypothesis
        # holds with f at the interval's top and must dominate the true gap
        for n, f in ((23, 28), (199, 210)):
            assert prime_count(table3k, f) == prime_count(table3k, n)
            gap = approximation_gap(table3k, n, 30)
            assert gap.gap.hi <= tail_product_upper(f)

    def test_matches_manual_chain(self):
        f = Fraction(100)
        s = 1 / f + 1 / f**2
        manual = zeta2_enclosure(30).hi * (rational_exp_upper(s) - 1)
        assert tail_product_upper(100) == min(Fraction(10, 100), manual)


class TestApproximationGap:
    # expected values frozen from a 60-digit independent subtraction oracle
    CASES = {
        2: (0.3116007335, 3, 1.061369),
        3: (0.1449340668, 2, 2.786531),
        10: (0.0498819835, 768, 0.451263),
    }

    @pytest.mark.parametrize("N", sorted(CASES))
    def test_frozen_cases(self, table3k, N):
        gap_value, q, exponent = self.CASES[N]
        report = approximation_gap(table3k, N, 30)
        assert report.q == q
        assert float(report.gap.midpoint) == pytest.approx(gap_value, abs=1e-9)
        assert report.exponent == pytest.approx(exponent, abs=1e-5)

    def test_gap_is_tight(self, table3k):
        report = approximation_gap(table3k, 50, 30)
        assert report.gap.lo > 0
        assert report.gap.width < report.gap.lo

    def test_exponent_none_for_unit_denominator(self, table3k):
        report = approximation_gap(table3k, 1, 10)
        assert report.q == 1
        assert report.exponent is None

    def test_small_digit_request_still_separates(self, table3k):
        report = approximation_gap(table3k, 300, 1)
        assert report.digits_used >= 1
        assert report.gap.width < report.gap.lo
