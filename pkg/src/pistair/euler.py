"""Exact partial Euler products for zeta(2) and their approximation quality.

The truncated product over primes p <= N of (1 - p^-2)^-1 is kept as an
exact reduced rational p_N/q_N.  A per-table cache extends the product one
prime at a time (one reduction per step), so sweeps over N and runs up to
N = 10^4 stay cheap even though q_N has thousands of digits.
"""

from __future__ import annotations

import math
import weakref
from dataclasses import dataclass
from fractions import Fraction

from . import config
from .arith import (
    RealEnclosure,
    as_rational,
    log_rational,
    rational_exp_upper,
    rational_str,
    zeta2_enclosure,
)
from .errors import DomainError, PrecisionExhaustedError, RangeError, ResourceLimitError
from .primes import PrimeTable, prime_count

#: prefix products kept one per prime up to this many primes (N ~ 17900);
#: beyond that only a single forward cursor is held, so memory stays bounded
#: while sweeps over small N and one-shot large N both stay cheap
_DENSE_PRIME_COUNT = 2048


class _ProductCache:
    __slots__ = ("dense", "cursor_k", "cursor_value")

    def __init__(self):
        self.dense = [Fraction(1)]
        self.cursor_k = 0
        self.cursor_value = Fraction(1)


_product_cache: "weakref.WeakKeyDictionary[PrimeTable, _ProductCache]" = (
    weakref.WeakKeyDictionary()
)


def _cached_products(t: PrimeTable, n_primes: int) -> Fraction:
    cache = _product_cache.get(t)
    if cache is None:
        cache = _ProductCache()
        _product_cache[t] = cache
    dense_target = min(n_primes, _DENSE_PRIME_COUNT)
    while len(cache.dense) <= dense_target:
        p = int(t.primes[len(cache.dense) - 1])
        cache.dense.append(cache.dense[-1] * Fraction(p * p, p * p - 1))
    if n_primes < len(cache.dense):
        return cache.dense[n_primes]
    if cache.cursor_k > n_primes or cache.cursor_k < len(cache.dense) - 1:
        cache.cursor_k = len(cache.dense) - 1
        cache.cursor_value = cache.dense[-1]
    value, k = cache.cursor_value, cache.cursor_k
    while k < n_primes:
        p = int(t.primes[k])
        value *= Fraction(p * p, p * p - 1)
        k += 1
    cache.cursor_k, cache.cursor_value = k, value
    return value


@dataclass(frozen=True)
class EulerApproximation:
    """The reduced truncated Euler product p_N/q_N at cutoff N."""

    N: int
    value: Fraction

    @property
    def q_digits(self) -> int:
        return len(str(self.value.denominator))

    def as_record(self) -> dict:
        return {"N": self.N, "value": rational_str(self.value), "q_digits": self.q_digits}


def euler_product(t: PrimeTable, N: int) -> EulerApproximation:
    """Exact product of p^2/(p^2 - 1) over primes p <= N; empty product is 1."""
    if N < 1:
        raise RangeError(f"N must be >= 1, got {N}")
    if N > t.limit:
        raise RangeError(f"Euler product to {N} needs a sieve beyond {t.limit}")
    return EulerApproximation(N, _cached_products(t, prime_count(t, N)))


@dataclass(frozen=True)
class QnBoundReport:
    """Exact integers and flags for the denominator bound chain at N."""

    N: int
    q: int
    prod_p2_minus_1: int
    n_pow_2pi: int
    factorial_sq: int
    chain_ok: bool  # q <= prod(p^2-1) <= N^(2 pi(N))
    factorial_ok: bool  # q <= (N!)^2
    q_divides_prod: bool

    def as_record(self) -> dict:
        return {
            "N": self.N,
            "q": str(self.q),
            "prod_p2_minus_1": str(self.prod_p2_minus_1),
            "n_pow_2pi": str(self.n_pow_2pi),
            "factorial_sq": str(self.factorial_sq),
            "chain_ok": self.chain_ok,
            "factorial_ok": self.factorial_ok,
            "q_divides_prod": self.q_divides_prod,
        }


def qn_bound_report(t: PrimeTable, N: int) -> QnBoundReport:
    """Check q_N <= prod_{p<=N}(p^2-1) <= N^(2 pi(N)) and q_N <= (N!)^2 exactly."""
    if N < 1:
        raise RangeError(f"N must be >= 1, got {N}")
    if N > t.limit:
        raise RangeError(f"bound report at {N} needs a sieve beyond {t.limit}")
    cap = config.factorial_cap()
    if N > cap:
        raise ResourceLimitError(
            f"N={N} exceeds the factorial cap {cap} "
            f"(raise {config.ENV_FACTORIAL_CAP} to override)"
        )
    q = euler_product(t, N).value.denominator
    k = prime_count(t, N)
    prod = math.prod(p * p - 1 for p in t.primes[:k].tolist()) if k else 1
    n_pow = N ** (2 * k)
    fact_sq = math.factorial(N) ** 2
    return QnBoundReport(
        N=N,
        q=q,
        prod_p2_minus_1=prod,
        n_pow_2pi=n_pow,
        factorial_sq=fact_sq,
        chain_ok=q <= prod <= n_pow,
        factorial_ok=q <= fact_sq,
        q_divides_prod=prod % q == 0,
    )


def tail_product_upper(f_value) -> Fraction:
    """Rational U bounding |pi^2/6 - p_N/q_N| when (N, f] holds no prime.

    Two bounds are combined: the coarse 10/f and the sharper chain
    zeta2_hi * (exp_upper(1/f^2 + 1/f) - 1); the smaller is returned.
    """
    f = as_rational(f_value)
    if f < 2:
        raise DomainError(f"tail bound requires f >= 2, got {f}")
    s = 1 / f + 1 / (f * f)
    sharper = zeta2_enclosure(30).hi * (rational_exp_upper(s) - 1)
    return min(Fraction(10) / f, sharper)


@dataclass(frozen=True)
class GapReport:
    """Enclosure of |pi^2/6 - p_N/q_N| and the implied measure-style exponent.

    The exponent -log(gap)/log(q_N) uses the gap midpoint and is only
    reported when the gap enclosure is relatively tight (width < lo) and
    q_N >= 2.
    """

    N: int
    value: Fraction
    q: int
    gap: RealEnclosure
    exponent: float | None
    digits_used: int

    def as_record(self) -> dict:
        return {
            "N": self.N,
            "value": rational_str(self.value),
            "q": str(self.q),
            "gap": self.gap.as_record(),
            "exponent": self.exponent,
            "digits_used": self.digits_used,
        }


def approximation_gap(t: PrimeTable, N: int, digits: int) -> GapReport:
    """Outward enclosure of the gap to zeta(2), refining digits as needed.

    The digit count doubles internally (up to the configured cap) until the
    enclosure separates p_N/q_N from zeta(2) with relative width below 1.
    """
    approx = euler_product(t, N)
    value = approx.value
    q = value.denominator
    d = max(1, digits)
    cap = config.digit_cap()
    while True:
        z = zeta2_enclosure(d)
        if value < z.lo:
            gap = z.abs_distance_to(value)
            if gap.width < gap.lo:
                exponent = None
                if q >= 2:
                    exponent = -log_rational(gap.midpoint) / math.log(q)
                return GapReport(N, value, q, gap, exponent, d)
        if d >= cap:
            raise PrecisionExhaustedError(
                f"gap at N={N} not separated from 0 within {cap} digits"
            )
        d = min(2 * d, cap)
