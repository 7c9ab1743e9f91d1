"""Exact rationals and rigorous two-sided enclosures of zeta(2) = pi^2/6.

Rationals are stdlib ``fractions.Fraction`` values (arbitrary-precision,
always reduced, denominator positive).  An enclosure is a pair of exact
rational endpoints known to bracket a real number; the zeta(2) enclosure
is produced from Machin's identity pi/4 = 4 arctan(1/5) - arctan(1/239)
with every rounding step accounted for, so the endpoints are proofs, not
estimates.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import config
from .errors import DomainError, ResourceLimitError

#: Extra decimal places carried through the fixed-point summation.  They
#: absorb the per-term floor rounding and the final squaring, keeping the
#: output width comfortably below 10^-digits (checked before returning).
GUARD_DIGITS = 10


def as_rational(value) -> Fraction:
    """Coerce value to an exact Fraction.

    Floats go through their shortest decimal repr, so ``as_rational(5.45)``
    is 109/20, not the 53-bit binary neighbour of 5.45.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value)
    raise DomainError(f"cannot interpret {value!r} as an exact rational")


def rational_str(q: Fraction) -> str:
    """Serialize a rational as 'numerator/denominator' in base 10."""
    return f"{q.numerator}/{q.denominator}"


def log_rational(q: Fraction) -> float:
    """Natural log of a positive rational, safe for huge numerator/denominator."""
    if q <= 0:
        raise DomainError(f"log of non-positive rational {rational_str(q)}")
    return math.log(q.numerator) - math.log(q.denominator)


class Placement(enum.Enum):
    """Position of a rational relative to an enclosure."""

    BELOW = "below"
    ABOVE = "above"
    OVERLAPPING = "overlapping"


@dataclass(frozen=True)
class RealEnclosure:
    """Exact rational endpoints lo <= hi bracketing a real number."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise DomainError(
                f"enclosure endpoints out of order: {rational_str(self.lo)} > "
                f"{rational_str(self.hi)}"
            )

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, r) -> bool:
        r = as_rational(r)
        return self.lo <= r <= self.hi

    def contains_enclosure(self, other: "RealEnclosure") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def abs_distance_to(self, r: Fraction) -> "RealEnclosure":
        """Enclosure of |x - r| over all x in this enclosure.

        Requires r to lie on or outside the endpoints; a rational interior
        to the enclosure is not separated from the bracketed real, so no
        positive lower bound on the distance exists.
        """
        r = as_rational(r)
        if r <= self.lo:
            return RealEnclosure(self.lo - r, self.hi - r)
        if r >= self.hi:
            return RealEnclosure(r - self.hi, r - self.lo)
        raise DomainError(
            "rational lies inside the enclosure; refine the enclosure first"
        )

    def as_record(self) -> dict:
        return {"lo": rational_str(self.lo), "hi": rational_str(self.hi)}


def enclosure_compare(x: RealEnclosure, r) -> Placement:
    """Classify rational r against enclosure x: BELOW means r < x.lo."""
    r = as_rational(r)
    if r < x.lo:
        return Placement.BELOW
    if r > x.hi:
        return Placement.ABOVE
    return Placement.OVERLAPPING


def _arctan_recip_scaled(x: int, scale: int) -> tuple[int, int]:
    """Integer bounds [lo, hi] on scale * arctan(1/x) for integer x >= 2.

    Sums the alternating series arctan(1/x) = sum (-1)^k / ((2k+1) x^(2k+1))
    in floor-rounded fixed point.  Each floored term underestimates its true
    value by less than one unit, counted per sign; the omitted tail is
    bounded by the first omitted term (alternating, strictly decreasing),
    which is below one unit at the stopping point.
    """
    x2 = x * x
    denom_pow = x  # x^(2k+1)
    k = 0
    acc = 0
    n_pos = 0
    n_neg = 0
    while True:
        t = scale // ((2 * k + 1) * denom_pow)
        if t == 0:
            break
        if k % 2 == 0:
            acc += t
            n_pos += 1
        else:
            acc -= t
            n_neg += 1
        k += 1
        denom_pow *= x2
    lo = acc - n_neg
    hi = acc + n_pos
    if k % 2 == 0:
        hi += 1  # omitted tail is positive and < 1 unit
    else:
        lo -= 1  # omitted tail is negative and > -1 unit
    return lo, hi


def zeta2_enclosure(digits: int) -> RealEnclosure:
    """Enclosure of zeta(2) = pi^2/6 with width at most 10^-digits.

    Machin's identity gives integer bounds on pi at ``digits + GUARD_DIGITS``
    decimal places; squaring and dividing by 6 stays exact on the rational
    endpoints, so the only error sources are the accounted series roundings.
    """
    if digits < 1:
        raise DomainError(f"digits must be >= 1, got {digits}")
    cap = config.digit_cap()
    if digits > cap:
        raise ResourceLimitError(
            f"digits={digits} exceeds the configured cap {cap} "
            f"(raise {config.ENV_DIGIT_CAP} to override)"
        )
    return _zeta2_cached(digits)


@lru_cache(maxsize=64)
def _zeta2_cached(digits: int) -> RealEnclosure:
    scale = 10 ** (digits + GUARD_DIGITS)
    a5_lo, a5_hi = _arctan_recip_scaled(5, scale)
    a239_lo, a239_hi = _arctan_recip_scaled(239, scale)
    # pi = 16 arctan(1/5) - 4 arctan(1/239); integer scaling is exact.
    pi_lo = 16 * a5_lo - 4 * a239_hi
    pi_hi = 16 * a5_hi - 4 * a239_lo
    enclosure = RealEnclosure(
        Fraction(pi_lo * pi_lo, 6 * scale * scale),
        Fraction(pi_hi * pi_hi, 6 * scale * scale),
    )
    # The guard digits make this unreachable; keep it as a hard contract.
    assert enclosure.width <= Fraction(1, 10**digits)
    return enclosure


def rational_exp_upper(x) -> Fraction:
    """Rational upper bound 1 + x + x^2 on exp(x) for 0 <= x <= 1.

    Valid because exp(x) = 1 + x + x^2 * sum_{k>=2} x^(k-2)/k! and the sum
    is at most e - 2 < 1 on this domain.  Exact at x = 0.
    """
    x = as_rational(x)
    if x < 0 or x > 1:
        raise DomainError(f"exp upper bound requires 0 <= x <= 1, got {x}")
    return 1 + x + x * x


def exp_taylor_enclosure(x, terms: int = 30) -> RealEnclosure:
    """Two-sided exact-rational Taylor bounds on exp(x) for 0 <= x <= 1.

    Independent of rational_exp_upper: partial sum below, partial sum plus
    twice the first omitted term above (the tail of the series is at most
    2 x^(K+1)/(K+1)! on this domain).
    """
    x = as_rational(x)
    if x < 0 or x > 1:
        raise DomainError(f"Taylor enclosure requires 0 <= x <= 1, got {x}")
    total = Fraction(0)
    term = Fraction(1)
    for k in range(terms):
        total += term
        term = term * x / (k + 1)
    return RealEnclosure(total, total + 2 * term)
