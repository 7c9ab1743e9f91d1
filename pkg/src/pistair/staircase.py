"""Iterated-exponential arithmetic and the prime-gap staircase certifiers.

A LogTower stores a number as exp applied `level` times to a float
mantissa, which is enough to compare, log-count, and certify numbers far
beyond any materializable integer.  On top of that sit the three gate
checkers (the factorial gate, the exp((log x)^e) sequence, the
a_{n+1} = a_n + log a_n sequence), the staircase certifier, and the
classic 2^2^k baseline.

Tower comparisons and the logarithmic staircase witnesses inherit float
precision: two towers whose values agree to within one ulp of the
top-level mantissa compare as equal.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

from . import config
from .errors import DomainError, RangeError, ResourceLimitError
from .euler import euler_product
from .primes import PrimeTable, nth_prime, prime_count

#: floats at or above this are promoted to level >= 1 representations
OVERFLOW = 1e300
#: exp() stays finite below this argument
MAX_EXP_ARG = 709.0

LN2 = math.log(2)
LN10 = math.log(10)


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class LogTower:
    """Value exp(exp(...exp(mantissa))) with `level` applications of exp.

    Normalized form keeps mantissa in [1, e) when level >= 1; level-0
    towers are plain floats and are never promoted by normalization.
    """

    level: int
    mantissa: float

    def as_record(self) -> dict:
        return {"level": self.level, "mantissa": self.mantissa}


def tower_normalize(level: int, mantissa: float) -> LogTower:
    """Canonical tower for exp^level(mantissa).

    Raises the level while the mantissa is >= e (mantissa -> log mantissa)
    and lowers while it is < 1 at level >= 1 (mantissa -> exp mantissa).
    """
    if level < 0:
        raise DomainError(f"tower level must be >= 0, got {level}")
    r = float(mantissa)
    k = int(level)
    if k == 0:
        return LogTower(0, r)
    if r <= 0 or math.isnan(r):
        raise DomainError(f"mantissa must be positive at level >= 1, got {r}")
    while True:
        if r >= math.e:
            r = math.log(r)
            k += 1
        elif r < 1 and k >= 1:
            r = math.exp(r)
            k -= 1
        else:
            break
    return LogTower(k, r)


def tower_from_float(value: float) -> LogTower:
    if not math.isfinite(value):
        raise DomainError(f"tower mantissa must be finite, got {value}")
    return LogTower(0, float(value))


def tower_from_int(n: int) -> LogTower:
    """Tower for an exact positive integer of any size."""
    if n <= 0:
        raise DomainError(f"towers represent positive values, got {n}")
    if n.bit_length() <= 996:  # < 1e300, exactly representable path
        return LogTower(0, float(n))
    return tower_normalize(1, math.log(n))


def tower_to_float(x: LogTower) -> float | None:
    """The represented value as a float, or None when it would overflow."""
    v = x.mantissa
    for _ in range(x.level):
        if v > MAX_EXP_ARG:
            return None
        v = math.exp(v)
    return v if abs(v) < OVERFLOW else None


def tower_compare(x: LogTower, y: LogTower) -> Ordering:
    """Total order on tower values.

    The lower-level operand is lifted with (k, r) -> (k+1, log r) until the
    levels match; a nonpositive mantissa met while lifting means the value
    is below anything still carrying levels.
    """
    kx, rx = x.level, x.mantissa
    ky, ry = y.level, y.mantissa
    while kx < ky:
        if rx <= 0:
            return Ordering.LESS
        rx = math.log(rx)
        kx += 1
    while ky < kx:
        if ry <= 0:
            return Ordering.GREATER
        ry = math.log(ry)
        ky += 1
    if rx < ry:
        return Ordering.LESS
    if rx > ry:
        return Ordering.GREATER
    return Ordering.EQUAL


def tower_ln(x: LogTower) -> LogTower:
    """Natural log of a positive tower value."""
    if x.level >= 1:
        return LogTower(x.level - 1, x.mantissa)
    if x.mantissa <= 0:
        raise DomainError(f"log of non-positive value {x.mantissa}")
    return LogTower(0, math.log(x.mantissa))


def tower_exp(x: LogTower) -> LogTower:
    """exp of a tower value."""
    if x.level == 0:
        if x.mantissa <= MAX_EXP_ARG:
            return LogTower(0, math.exp(x.mantissa))
        return tower_normalize(1, x.mantissa)
    return tower_normalize(x.level + 1, x.mantissa)


def tower_add(x: LogTower, y: LogTower) -> LogTower:
    """x + y for positive tower values.

    Exact in float whenever both values fit; one level down it uses
    ln(x+y) = ln x + log1p(y/x); beyond that the smaller addend is below
    one ulp of the dominant mantissa and is absorbed.
    """
    fx, fy = tower_to_float(x), tower_to_float(y)
    if fx is not None and fy is not None and fx + fy < OVERFLOW:
        return tower_from_float(fx + fy)
    if tower_compare(x, y) is Ordering.LESS:
        x, y = y, x
    lx, ly = tower_ln(x), tower_ln(y)
    flx, fly = tower_to_float(lx), tower_to_float(ly)
    if flx is not None and fly is not None:
        return tower_exp(tower_from_float(flx + math.log1p(math.exp(min(fly - flx, 0.0)))))
    return x


def tower_mul(x: LogTower, y: LogTower) -> LogTower:
    """x * y for positive tower values, via logs when floats overflow."""
    fx, fy = tower_to_float(x), tower_to_float(y)
    if fx is not None and fy is not None and abs(fx * fy) < OVERFLOW:
        return tower_from_float(fx * fy)
    return tower_exp(tower_add(tower_ln(x), tower_ln(y)))


def power_tower(base: float, height: int) -> LogTower:
    """base^base^...^base with `height` copies, folded from the top via logs."""
    if height < 1:
        raise DomainError(f"tower height must be >= 1, got {height}")
    if base <= 1:
        raise DomainError(f"only growing towers (base > 1) are supported, got {base}")
    ln_base = tower_from_float(math.log(base))
    t = tower_from_float(float(base))
    for _ in range(height - 1):
        t = tower_exp(tower_mul(t, ln_base))
    return t


def _tower_minus_one(x: LogTower) -> LogTower:
    # x - 1 for x > 1; beyond float range the unit is below one ulp
    f = tower_to_float(x)
    if f is not None:
        return tower_from_float(f - 1.0)
    return x


# ---------------------------------------------------------------------------
# Theorem gates and sequences
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FactorialGate:
    """Exact check of 10 * q_N^6 < (N!)^14 at a single N.

    When the gate holds and no prime lies in (N, (N!)^14], the truncated
    Euler product is within 1/q_N^6 of pi^2/6 - too close for the measure
    bound, which is what forces a prime into the interval.
    """

    N: int
    q: int
    f: int  # (N!)^14
    lhs: int  # 10 * q^6
    holds: bool
    slack_log10: float  # log10(f) - log10(lhs), the unused room in the gate

    def reading(self) -> str:
        relation = "<" if self.holds else ">="
        return (
            f"10*q^6 {relation} (N!)^14 at N={self.N}; if it holds and no prime "
            f"lies in (N, (N!)^14], the product is within 1/q^6 of pi^2/6"
        )

    def as_record(self) -> dict:
        return {
            "N": self.N,
            "q": str(self.q),
            "f": str(self.f),
            "lhs": str(self.lhs),
            "holds": self.holds,
            "slack_log10": self.slack_log10,
            "reading": self.reading(),
        }


def theorem1_first_passing(t: PrimeTable, n_max: int = 100) -> int | None:
    """Smallest N <= n_max where the factorial gate holds.

    The underlying argument only promises the gate "eventually"; this makes
    the threshold empirical instead.
    """
    for n in range(1, n_max + 1):
        if theorem1_gate(t, n).holds:
            return n
    return None


def theorem1_gate(t: PrimeTable, N: int) -> FactorialGate:
    """The factorial gate 10 * q_N^6 < (N!)^14 by exact integer comparison."""
    cap = config.factorial_cap()
    if N > cap:
        raise ResourceLimitError(
            f"N={N} exceeds the factorial cap {cap} "
            f"(raise {config.ENV_FACTORIAL_CAP} to override)"
        )
    q = euler_product(t, N).value.denominator
    f = math.factorial(N) ** 14
    lhs = 10 * q**6
    return FactorialGate(
        N=N,
        q=q,
        f=f,
        lhs=lhs,
        holds=lhs < f,
        slack_log10=math.log10(f) - math.log10(lhs),
    )


@dataclass(frozen=True)
class DoubleExpEntry:
    """One element x_n = exp(exp(loglog)) of the exp((log x)^e) iteration."""

    n: int
    loglog: float  # iterated: loglog_{n+1} = e * loglog_n
    loglog_closed: float  # closed form e^n
    tower: LogTower

    def as_record(self) -> dict:
        return {
            "n": self.n,
            "loglog": self.loglog,
            "loglog_closed": self.loglog_closed,
            "tower": self.tower.as_record(),
        }


#: the loglog seed exceeds float range above this index
DOUBLE_EXP_MAX_N = 700


def theorem2_sequence(n_max: int) -> list[DoubleExpEntry]:
    """x_0 = e^e iterated under x -> exp((log x)^e), tracked in log log.

    Applying log twice to the recursion gives loglog x_{n+1} = e * loglog
    x_n exactly, which is what gets iterated; the closed form e^n rides
    along for comparison rather than being assumed.
    """
    if n_max < 0:
        raise RangeError(f"n_max must be >= 0, got {n_max}")
    if n_max > DOUBLE_EXP_MAX_N:
        raise RangeError(
            f"n_max={n_max} exceeds {DOUBLE_EXP_MAX_N}; the log-log value "
            "e^n leaves float range"
        )
    entries = []
    loglog = 1.0  # log log e^e
    for n in range(n_max + 1):
        entries.append(
            DoubleExpEntry(
                n=n,
                loglog=loglog,
                loglog_closed=math.exp(n),
                tower=tower_normalize(2, loglog),
            )
        )
        loglog *= math.e
    return entries


@dataclass(frozen=True)
class GapRecursionCheckpoint:
    n: int
    a_n: float
    p_n: int | None
    rel_diff: float | None

    def as_record(self) -> dict:
        return {"n": self.n, "a_n": self.a_n, "p_n": self.p_n, "rel_diff": self.rel_diff}


@dataclass(frozen=True)
class GapRecursionReport:
    """The a_{n+1} = a_n + log a_n iteration with its sandwich verification."""

    n_max: int
    a_final: float
    sandwich_ok: bool
    first_sandwich_violation: int | None
    min_increment: float
    checkpoints: list[GapRecursionCheckpoint]

    def as_record(self) -> dict:
        return {
            "n_max": self.n_max,
            "a_final": self.a_final,
            "sandwich_ok": self.sandwich_ok,
            "first_sandwich_violation": self.first_sandwich_violation,
            "min_increment": self.min_increment,
            "checkpoints": [c.as_record() for c in self.checkpoints],
        }


def theorem3_sequence(
    n_max: int,
    t: PrimeTable | None = None,
    checkpoints: list[int] | None = None,
) -> GapRecursionReport:
    """Iterate a_2 = e, a_{n+1} = a_n + log a_n and verify the sandwich.

    n log n - n < a_n <= 2 n log n is checked at every step.  With a prime
    table, |a_n - p_n|/p_n is reported at the checkpoints (default: powers
    of ten the table can answer).
    """
    if n_max < 2:
        raise RangeError(f"n_max must be >= 2, got {n_max}")
    if checkpoints is None:
        if t is None:
            wanted = []
        else:
            wanted = [10**k for k in range(3, 8) if 10**k <= min(n_max, len(t.primes))]
    else:
        wanted = sorted(set(checkpoints))
        if any(c < 2 or c > n_max for c in wanted):
            raise RangeError(f"checkpoints must lie in [2, {n_max}]")
    checkpoint_set = set(wanted)

    a = math.e
    sandwich_ok = True
    first_violation = None
    min_increment = math.inf
    marks = []
    for n in range(2, n_max + 1):
        log_n = math.log(n)
        if not (n * log_n - n < a <= 2 * n * log_n):
            if sandwich_ok:
                first_violation = n
            sandwich_ok = False
        if n in checkpoint_set:
            if t is None:
                marks.append(GapRecursionCheckpoint(n, a, None, None))
            else:
                p_n = nth_prime(t, n)
                marks.append(GapRecursionCheckpoint(n, a, p_n, abs(a - p_n) / p_n))
        if n == n_max:
            break
        increment = math.log(a)
        min_increment = min(min_increment, increment)
        a += increment
    return GapRecursionReport(
        n_max=n_max,
        a_final=a,
        sandwich_ok=sandwich_ok,
        first_sandwich_violation=first_violation,
        min_increment=min_increment if min_increment is not math.inf else 0.0,
        checkpoints=marks,
    )


# ---------------------------------------------------------------------------
# Staircase certificates
# ---------------------------------------------------------------------------

Q_MODES = ("factorial-squared", "power-2piN", "assumed-g")


@dataclass(frozen=True)
class StaircaseStep:
    """One certified interval (start, end] of the staircase.

    Exact steps carry re-checkable integers; logarithmic steps carry
    natural-log values (and the end tower), used once exact witnesses
    would blow the big-integer budget.
    """

    index: int
    start: "int | LogTower"
    end: "int | LogTower"
    witness_mode: str  # "exact" | "logarithmic"
    q: int | None  # q_start where materializable
    q_bound: int | None  # Q(start), exact mode only
    witness_ok: bool | None  # 10 * q^m < end, exact re-check
    ln_q_bound: float | None
    ln_end: float | None
    sieve_confirmed: bool | None  # None when end is beyond the table
    prime_witness: int | None

    def as_record(self) -> dict:
        def endpoint(v):
            return str(v) if isinstance(v, int) else v.as_record()

        return {
            "index": self.index,
            "start": endpoint(self.start),
            "end": endpoint(self.end),
            "witness_mode": self.witness_mode,
            "q": None if self.q is None else str(self.q),
            "q_bound": None if self.q_bound is None else str(self.q_bound),
            "witness_ok": self.witness_ok,
            "ln_q_bound": self.ln_q_bound,
            "ln_end": self.ln_end,
            "sieve_confirmed": self.sieve_confirmed,
            "prime_witness": self.prime_witness,
        }


@dataclass(frozen=True)
class StaircaseCertificate:
    """A chain of intervals each certified (under the stated hypothesis)
    to contain a prime, with the implied pi(x) lower bounds."""

    measure_bound: float
    exponent: int
    q_mode: str
    start: int
    pi_at_start: int
    steps: list[StaircaseStep]
    truncated_reason: str | None

    def lower_bounds(self) -> list[tuple["int | LogTower", int]]:
        """(threshold, count) pairs: pi(threshold) >= count under the hypothesis."""
        return [
            (step.end, self.pi_at_start + step.index + 1) for step in self.steps
        ]

    def as_record(self) -> dict:
        def endpoint(v):
            return str(v) if isinstance(v, int) else v.as_record()

        return {
            "measure_bound": self.measure_bound,
            "exponent": self.exponent,
            "q_mode": self.q_mode,
            "start": self.start,
            "pi_at_start": self.pi_at_start,
            "steps": [s.as_record() for s in self.steps],
            "lower_bounds": [
                {"at": endpoint(at), "pi_at_least": k} for at, k in self.lower_bounds()
            ],
            "truncated_reason": self.truncated_reason,
        }


def default_exponent(b: float) -> int:
    """Smallest integer exceeding the measure bound b (6 at the 5.45 bound)."""
    return math.floor(b) + 1


def _ln_q_bound_int(t: PrimeTable, n: int, q_mode: str, g) -> tuple[float | None, str | None]:
    """(ln Q(n), None) for an integer start, or (None, reason) if unavailable."""
    if q_mode == "factorial-squared":
        if n <= 10**15:
            return 2 * math.lgamma(n + 1), None
        # Stirling's main term; relative error ~ log n / (n log n)
        ln_n = math.log(n)
        return 2 * n * (ln_n - 1), None
    if q_mode == "power-2piN":
        if n > t.limit:
            return None, f"pi({n}) unknown beyond the sieve limit {t.limit}"
        return 2 * prime_count(t, n) * math.log(n), None
    q_bound = g(n)
    if not isinstance(q_bound, int) or q_bound < 1:
        raise DomainError("assumed-g must return a positive integer bound")
    return math.log(q_bound), None


def _step_from_int(
    t: PrimeTable, index: int, n: int, m: int, q_mode: str, g, budget: int, q_cap: int
):
    ln_q, reason = _ln_q_bound_int(t, n, q_mode, g)
    if reason is not None:
        return None, reason
    est_digits = (m * ln_q + LN10) / LN10
    if est_digits <= budget:
        if q_mode == "factorial-squared":
            q_bound = math.factorial(n) ** 2
        elif q_mode == "power-2piN":
            q_bound = n ** (2 * prime_count(t, n))
        else:
            q_bound = g(n)
        end = 10 * q_bound**m + 1
        q = None
        witness_ok = None
        if n <= min(t.limit, q_cap):
            q = euler_product(t, n).value.denominator
            witness_ok = 10 * q**m < end
        sieve_confirmed = None
        prime_witness = None
        if end <= t.limit:
            lo_count = prime_count(t, n)
            hi_count = prime_count(t, end)
            sieve_confirmed = hi_count > lo_count
            if sieve_confirmed:
                prime_witness = int(t.primes[lo_count])
        return (
            StaircaseStep(
                index=index,
                start=n,
                end=end,
                witness_mode="exact",
                q=q,
                q_bound=q_bound,
                witness_ok=witness_ok,
                ln_q_bound=ln_q,
                ln_end=math.log(end),
                sieve_confirmed=sieve_confirmed,
                prime_witness=prime_witness,
            ),
            None,
        )
    ln_end = m * ln_q + LN10
    end_tower = tower_normalize(1, ln_end)
    return (
        StaircaseStep(
            index=index,
            start=n,
            end=end_tower,
            witness_mode="logarithmic",
            q=None,
            q_bound=None,
            witness_ok=None,
            ln_q_bound=ln_q,
            ln_end=ln_end,
            sieve_confirmed=None,
            prime_witness=None,
        ),
        None,
    )


def _step_from_tower(t: PrimeTable, index: int, x: LogTower, m: int, q_mode: str):
    if q_mode == "power-2piN":
        return None, "pi(N) unknown at tower scale"
    if q_mode == "assumed-g":
        return None, "assumed bound not evaluable at tower scale"
    # ln Q = 2 ln(N!) ~ 2 N (ln N - 1), Stirling's main term
    ln_q_tower = tower_mul(
        tower_from_float(2.0), tower_mul(x, _tower_minus_one(tower_ln(x)))
    )
    ln_end_tower = tower_add(
        tower_mul(tower_from_float(float(m)), ln_q_tower), tower_from_float(LN10)
    )
    return (
        StaircaseStep(
            index=index,
            start=x,
            end=tower_exp(ln_end_tower),
            witness_mode="logarithmic",
            q=None,
            q_bound=None,
            witness_ok=None,
            ln_q_bound=tower_to_float(ln_q_tower),
            ln_end=tower_to_float(ln_end_tower),
            sieve_confirmed=None,
            prime_witness=None,
        ),
        None,
    )


def staircase_certify(
    t: PrimeTable,
    b: float,
    m: int | None,
    q_mode: str,
    N_start: int,
    steps: int,
    g: Callable[[int], int] | None = None,
) -> StaircaseCertificate:
    """Build a staircase of intervals (N_i, N_{i+1}] with N_{i+1} just above
    10 * Q(N_i)^m, where Q bounds the Euler denominator per q_mode.

    Under the hypothesis that the measure bound b holds (with m > b) and
    that Q really bounds q_N, each interval must contain a prime; steps
    inside the sieve range are confirmed unconditionally.  Witnesses are
    exact integers while they fit the big-integer budget and natural-log
    values beyond it.
    """
    if q_mode not in Q_MODES:
        raise DomainError(f"q_mode must be one of {Q_MODES}, got {q_mode!r}")
    if m is None:
        m = default_exponent(b)
    if not m > b:
        raise DomainError(f"need exponent m > measure bound b, got m={m}, b={b}")
    if N_start < 2:
        raise RangeError(f"N_start must be >= 2, got {N_start}")
    if N_start > t.limit:
        raise RangeError(f"N_start={N_start} exceeds the sieve limit {t.limit}")
    if steps < 1:
        raise RangeError(f"steps must be >= 1, got {steps}")
    if q_mode == "assumed-g" and g is None:
        raise DomainError("assumed-g mode needs the bound function g")

    budget = config.bigint_digit_budget()
    q_cap = config.factorial_cap()
    chain: list[StaircaseStep] = []
    truncated = None
    current: "int | LogTower" = N_start
    for index in range(steps):
        if isinstance(current, int):
            if current.bit_length() > 996 and q_mode == "factorial-squared":
                # mixed int/float arithmetic on ints this large overflows
                step, truncated = _step_from_tower(
                    t, index, tower_from_int(current), m, q_mode
                )
            else:
                step, truncated = _step_from_int(
                    t, index, current, m, q_mode, g, budget, q_cap
                )
        else:
            step, truncated = _step_from_tower(t, index, current, m, q_mode)
        if step is None:
            break
        chain.append(step)
        current = step.end
    return StaircaseCertificate(
        measure_bound=b,
        exponent=m,
        q_mode=q_mode,
        start=N_start,
        pi_at_start=prime_count(t, N_start),
        steps=chain,
        truncated_reason=truncated,
    )


def euclid_baseline(x: LogTower) -> int:
    """Largest k >= 0 with 2^(2^k) <= x (0 when even k = 0 fails).

    Exact integer doubling decides small integral inputs; larger towers go
    through log2 log2 x in floats.
    """
    if x.level == 0:
        if x.mantissa < 2:
            return 0
        if x.mantissa < 2**53 and float(x.mantissa).is_integer():
            n = int(x.mantissa)
            k = 0
            while 2 ** (2 ** (k + 1)) <= n:
                k += 1
            return k
    lx = tower_ln(x)
    flx = tower_to_float(lx)
    if flx is not None:
        if flx < LN2:
            return 0
        return max(0, math.floor(math.log2(flx / LN2)))
    fllx = tower_to_float(tower_ln(lx))
    if fllx is not None:
        return math.floor((fllx - math.log(LN2)) / LN2)
    raise ResourceLimitError("tower too deep: the doubling count exceeds float range")
