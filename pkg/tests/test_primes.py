import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pistair import (
    RangeError,
    ResourceLimitError,
    lcm_to,
    log_lcm_table,
    log_lcm_to,
    max_power_at_most,
    nth_prime,
    prime_count,
    sieve,
)


def trial_division_primes(limit):
    out = []
    for n in range(2, limit + 1):
        if all(n % p for p in out if p * p <= n):
            out.append(n)
    return out


def fold_lcm(n):
    value = 1
    for k in range(2, n + 1):
        value = math.lcm(value, k)
    return value


class TestSieve:
    def test_small_tables(self):
        assert sieve(10).primes.tolist() == [2, 3, 5, 7]
        assert sieve(2).primes.tolist() == [2]

    def test_against_trial_division(self):
        assert sieve(1000).primes.tolist() == trial_division_primes(1000)

    def test_hundred_has_25_primes(self):
        assert len(sieve(100)) == 25

    def test_rejects_tiny_limit(self):
        with pytest.raises(RangeError):
            sieve(1)

    def test_resource_cap(self, monkeypatch):
        monkeypatch.setenv("PISTAIR_SIEVE_LIMIT", "1000")
        with pytest.raises(ResourceLimitError):
            sieve(2000)

    def test_segmented_matches_flat(self):
        plain = sieve(50_000)
        segmented = sieve(50_000, segment_size=1_000)
        assert np.array_equal(plain.primes, segmented.primes)

    def test_table_is_readonly(self):
        t = sieve(100)
        with pytest.raises(ValueError):
            t.primes[0] = 1


class TestPrimeCount:
    def test_examples(self, table3k):
        assert prime_count(table3k, 10) == 4
        assert prime_count(table3k, 1) == 0
        assert prime_count(table3k, 100) == 25

    def test_real_argument(self, table3k):
        assert prime_count(table3k, 10.5) == 4
        assert prime_count(table3k, 2.0) == 1

    def test_range_error(self, table3k):
        with pytest.raises(RangeError):
            prime_count(table3k, 3001)

    def test_inverse_adjacency(self, table3k):
        for x in (10, 97, 98, 1000, 2500):
            k = prime_count(table3k, x)
            assert nth_prime(table3k, k) <= x < nth_prime(table3k, k + 1)


class TestNthPrime:
    def test_examples(self, table3k):
        assert nth_prime(table3k, 1) == 2
        assert nth_prime(table3k, 4) == 7

    def test_millionth_prime(self, bigtable):
        assert nth_prime(bigtable, 1_000_000) == 15485863

    def test_error_carries_estimate(self, table3k):
        with pytest.raises(RangeError, match="roughly"):
            nth_prime(table3k, 10**6)


class TestMaxPower:
    def test_exact_boundaries(self):
        assert max_power_at_most(2, 8) == (3, 8)
        assert max_power_at_most(2, 7) == (2, 4)
        assert max_power_at_most(3, 81) == (4, 81)

    @given(st.integers(2, 50), st.integers(2, 10**6))
    @settings(max_examples=100, deadline=None)
    def test_tight(self, p, n):
        if p > n:
            return
        k, pk = max_power_at_most(p, n)
        assert pk == p**k <= n < p ** (k + 1)


class TestLcmTo:
    def test_examples(self, table3k):
        assert lcm_to(table3k, 1) == 1
        assert lcm_to(table3k, 5) == 60
        assert lcm_to(table3k, 10) == 2520

    def test_against_fold_oracle(self, table3k):
        value = 1
        for n in range(1, 401):
            value = math.lcm(value, n)
            assert lcm_to(table3k, n) == value

    def test_step_rule_exhaustive(self):
        # d_{n+1}/d_n is p when n+1 = p^k, else 1; exhaustive to 5000
        t = sieve(5001)
        prime_set = set(t.primes.tolist())
        previous = 1
        for n in range(2, 5001):
            current = math.lcm(previous, n)
            assert current % previous == 0
            ratio = current // previous
            if ratio != 1:
                assert ratio in prime_set
                k, pk = max_power_at_most(ratio, n)
                assert pk == n  # n is exactly ratio^k
            else:
                # n must not be a prime power
                assert not any(
                    max_power_at_most(p, n)[1] == n
                    for p in prime_set
                    if p <= n and n % p == 0
                )
            previous = current
        # the incremental chain is the same object lcm_to computes
        assert previous == lcm_to(t, 5000)

    def test_range_error(self, table3k):
        with pytest.raises(RangeError):
            lcm_to(table3k, 3001)


class TestLogLcm:
    def test_examples(self, table3k):
        assert log_lcm_to(table3k, 10).log_lcm == pytest.approx(math.log(2520), abs=1e-12)
        assert log_lcm_to(table3k, 2).log_lcm == pytest.approx(math.log(2), abs=1e-12)

    def test_reports_comparison_values(self, table3k):
        rep = log_lcm_to(table3k, 100)
        assert rep.pi_log_n == pytest.approx(25 * math.log(100), abs=1e-9)
        assert rep.log_sq_n == pytest.approx(math.log(100) ** 2, abs=1e-9)
        assert rep.log_lcm <= rep.pi_log_n

    def test_matches_exact_lcm(self, table3k):
        for n in (2, 17, 128, 720, 2999):
            exact = math.log(lcm_to(table3k, n))
            assert log_lcm_to(table3k, n).log_lcm == pytest.approx(exact, rel=1e-12)

    def test_bulk_table_consistent(self, table3k):
        table = log_lcm_table(table3k, 3000)
        assert table[0] == 0 and table[1] == 0
        for n in (2, 10, 100, 999, 3000):
            assert table[n] == pytest.approx(log_lcm_to(table3k, n).log_lcm, rel=1e-12)

    def test_log_square_bound_under_hypothesis(self, table3k):
        # wherever pi(n) <= log n holds, log d_n <= (log n)^2 follows
        for n in range(2, 3001):
            if prime_count(table3k, n) <= math.log(n):
                rep = log_lcm_to(table3k, n)
                assert rep.log_lcm <= rep.log_sq_n + 1e-9
