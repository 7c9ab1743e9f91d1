"""Continued fractions of enclosed reals and irrationality-exponent arithmetic.

Partial quotients are emitted only while the Gauss map agrees on both
enclosure endpoints, so every quotient is provably correct for every real
the enclosure brackets.  Exponent measurements, the growth-rate bound
mu <= 1 + rho/sigma with the published page-102 constants, and the
primorial inequality check are all exact-rational or exact-integer at the
decision points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

from . import config
from .arith import RealEnclosure, as_rational, log_rational, rational_str, zeta2_enclosure
from .errors import DomainError, PrecisionExhaustedError, RangeError
from .primes import PrimeTable, nth_prime


def continued_fraction(x: RealEnclosure, max_terms: int) -> list[int]:
    """Longest provably-correct prefix of partial quotients for x.

    Runs the Gauss map on both endpoints in exact rational arithmetic and
    stops at the first disagreeing floor (or when an endpoint terminates).
    An exact rational (lo == hi) yields its full canonical expansion, up to
    max_terms.
    """
    if x.lo <= 0:
        raise DomainError("continued fraction requires a positive enclosure")
    if max_terms < 1:
        raise DomainError(f"max_terms must be >= 1, got {max_terms}")
    lo, hi = x.lo, x.hi
    quotients: list[int] = []
    while len(quotients) < max_terms:
        a_lo = lo.numerator // lo.denominator
        a_hi = hi.numerator // hi.denominator
        if a_lo != a_hi:
            break
        quotients.append(a_lo)
        frac_lo = lo - a_lo
        frac_hi = hi - a_hi
        if frac_lo == 0 or frac_hi == 0:
            # An endpoint is exactly rational here; interior points may
            # continue with arbitrarily large quotients, so stop.
            break
        lo, hi = 1 / frac_hi, 1 / frac_lo
    return quotients


@dataclass(frozen=True)
class ConvergentRecord:
    """One convergent p/q with its quotient and (optionally) its exponent."""

    index: int
    partial_quotient: int
    p: int
    q: int
    exponent: float | None = None

    def as_record(self) -> dict:
        return {
            "index": self.index,
            "partial_quotient": str(self.partial_quotient),
            "p": str(self.p),
            "q": str(self.q),
            "exponent": self.exponent,
        }


def convergents(quotients: list[int]) -> list[ConvergentRecord]:
    """Convergents via p_k = a_k p_{k-1} + p_{k-2} (and likewise for q).

    Consecutive convergents satisfy p_k q_{k-1} - p_{k-1} q_k = (-1)^(k-1),
    so each p/q is automatically in lowest terms.
    """
    if not quotients:
        raise DomainError("quotient list must be nonempty")
    if quotients[0] < 0:
        raise DomainError(f"leading quotient must be >= 0, got {quotients[0]}")
    records = []
    p_prev, q_prev = 1, 0
    p, q = quotients[0], 1
    records.append(ConvergentRecord(0, quotients[0], p, q))
    for k, a in enumerate(quotients[1:], start=1):
        if a < 1:
            raise DomainError(f"quotient at index {k} must be >= 1, got {a}")
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        records.append(ConvergentRecord(k, a, p, q))
    return records


def measure_exponents(
    x: RealEnclosure, records: list[ConvergentRecord]
) -> tuple[list[ConvergentRecord], float | None]:
    """Fill exponent = -log|x - p/q| / log q for each convergent with q >= 2.

    The enclosure must separate every p/q with relative width below 1;
    otherwise the measurement is meaningless and PrecisionExhaustedError
    asks the caller for a finer enclosure.  Also returns the running
    maximum exponent.
    """
    out = []
    best: float | None = None
    for rec in records:
        if rec.q < 2:
            out.append(replace(rec, exponent=None))
            continue
        target = Fraction(rec.p, rec.q)
        if x.lo < target < x.hi:
            raise PrecisionExhaustedError(
                f"enclosure does not separate convergent {rec.p}/{rec.q}"
            )
        gap = x.abs_distance_to(target)
        if not gap.width < gap.lo:
            raise PrecisionExhaustedError(
                f"gap enclosure too wide at convergent {rec.p}/{rec.q}"
            )
        exponent = -log_rational(gap.midpoint) / math.log(rec.q)
        best = exponent if best is None else max(best, exponent)
        out.append(replace(rec, exponent=exponent))
    return out, best


def zeta2_exponent_report(
    max_q: int, digits: int = 60, max_terms: int = 200
) -> tuple[list[ConvergentRecord], float | None]:
    """Measured exponents for all zeta(2) convergents with q <= max_q.

    Doubles the working digits (up to the configured cap) until every
    convergent is separated, re-deriving quotients at each refinement;
    emitted prefixes are stable under refinement, so records only extend.
    """
    d = max(1, digits)
    cap = config.digit_cap()
    while True:
        enc = zeta2_enclosure(d)
        all_records = convergents(continued_fraction(enc, max_terms))
        # The prefix provably covers max_q only once it reaches past it.
        if all_records[-1].q > max_q:
            records = [r for r in all_records if r.q <= max_q]
            try:
                return measure_exponents(enc, records)
            except PrecisionExhaustedError:
                pass
        if d >= cap:
            raise PrecisionExhaustedError(
                f"convergents up to q <= {max_q} not resolvable within {cap} digits"
            )
        d = min(2 * d, cap)


@dataclass(frozen=True)
class RVConstants:
    """Growth-rate constants (a, b) and the derived (rho, sigma) pair."""

    a: float
    b: float
    rho: float | None = None
    sigma: float | None = None

    def as_record(self) -> dict:
        return {"a": self.a, "b": self.b, "rho": self.rho, "sigma": self.sigma}


#: Published page-102 values used throughout the gates.
RV_PAGE102 = RVConstants(a=-2.55306095, b=1.70036709)

LEMMA4_MODES = ("raw", "shifted")


def lemma4_derivation(c: RVConstants, mode: str = "raw") -> RVConstants:
    """Derive (rho, sigma) from (a, b) for the requested mode.

    raw:     rho = b,     sigma = -a       (bound 1 - b/a)
    shifted: rho = b + 2, sigma = -(a + 2) (bound (a - b)/(a + 2))
    """
    if mode == "raw":
        rho, sigma = c.b, -c.a
    elif mode == "shifted":
        rho, sigma = c.b + 2, -(c.a + 2)
    else:
        raise DomainError(f"mode must be one of {LEMMA4_MODES}, got {mode!r}")
    if sigma <= 0:
        raise DomainError(f"mode {mode!r} needs sigma > 0, got sigma = {sigma}")
    return RVConstants(a=c.a, b=c.b, rho=rho, sigma=sigma)


def lemma4_bound(c: RVConstants, mode: str = "raw") -> float:
    """The measure bound 1 + rho/sigma for the requested mode."""
    derived = lemma4_derivation(c, mode)
    return 1 + derived.rho / derived.sigma


@dataclass(frozen=True)
class SondowCheck:
    """Exact witness for p_{n+1} <= (p_1 ... p_n)^(2 mu)."""

    n: int
    p_next: int
    primorial: int
    mu: Fraction
    holds: bool

    def as_record(self) -> dict:
        return {
            "n": self.n,
            "p_next": self.p_next,
            "primorial": str(self.primorial),
            "mu": rational_str(self.mu),
            "holds": self.holds,
        }


def sondow_inequality_check(t: PrimeTable, n: int, mu_bound) -> SondowCheck:
    """Test p_{n+1} <= (p_1 ... p_n)^(2 mu) by pure integer cross-powers.

    With mu = num/den the inequality is equivalent to
    p_{n+1}^den <= primorial^(2 num), which is decided exactly.
    """
    if n < 1:
        raise RangeError(f"n must be >= 1, got {n}")
    mu = as_rational(mu_bound)
    if mu <= 0:
        raise DomainError(f"mu bound must be positive, got {mu}")
    p_next = nth_prime(t, n + 1)
    primorial = math.prod(int(t.primes[i]) for i in range(n))
    holds = p_next**mu.denominator <= primorial ** (2 * mu.numerator)
    return SondowCheck(n=n, p_next=p_next, primorial=primorial, mu=mu, holds=holds)
