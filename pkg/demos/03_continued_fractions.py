#!/usr/bin/env python3
"""Provably-correct continued fractions and exponent measurements.

Partial quotients come from running the Gauss map on both enclosure
endpoints and keeping the common prefix, so every emitted quotient holds
for the enclosed real itself.  Convergents then give the best rational
approximations, whose measured exponents all exceed 2 -- the floor for
any irrational.  The growth-rate rule mu <= 1 + rho/sigma turns published
sequence constants into measure bounds, and the primorial inequality
shows a measure bound pushing back on prime gaps directly.
"""

from pistair import (
    RV_PAGE102,
    continued_fraction,
    convergents,
    lemma4_bound,
    lemma4_derivation,
    measure_exponents,
    sieve,
    sondow_inequality_check,
    zeta2_enclosure,
)

enc = zeta2_enclosure(60)
quotients = continued_fraction(enc, 40)
print("=" * 72)
print("  Continued fraction of zeta(2), certified prefix")
print("=" * 72)
print(f"\nquotients: {quotients}")

records = convergents(quotients)
filled, best = measure_exponents(enc, [r for r in records if r.q <= 10**10])
print(f"\n{'k':>3} {'a_k':>4} {'p/q':>22} {'exponent':>9}")
for r in filled[:14]:
    exponent = f"{r.exponent:.4f}" if r.exponent is not None else "-"
    print(f"{r.index:>3} {r.partial_quotient:>4} {f'{r.p}/{r.q}':>22} {exponent:>9}")
print(f"\nrunning maximum exponent: {best:.4f} (every q >= 2 exponent exceeds 2)")

det_ok = all(
    records[k].p * records[k - 1].q - records[k - 1].p * records[k].q == (-1) ** (k - 1)
    for k in range(1, len(records))
)
print(f"determinant identity p_k q_(k-1) - p_(k-1) q_k = +/-1: {det_ok}")

print("\n" + "=" * 72)
print("  Growth-rate arithmetic: mu <= 1 + rho/sigma")
print("=" * 72)
for mode in ("raw", "shifted"):
    d = lemma4_derivation(RV_PAGE102, mode)
    print(
        f"  mode={mode:<8} rho={d.rho:+.8f}  sigma={d.sigma:+.8f}"
        f"  ->  bound {lemma4_bound(RV_PAGE102, mode):.7f}"
    )
print("  raw < 2 contradicts the exponent floor for irrationals --")
print("  which is exactly the lever that forces pi(x) above any o(x/log x) target.")

print("\n" + "=" * 72)
print("  Primorial inequality p_(n+1) <= (p_1...p_n)^(2 mu) at mu = 5.45")
print("=" * 72)
t = sieve(100)
print(f"{'n':>3} {'p_(n+1)':>8} {'primorial':>18} {'holds':>6}")
for n in range(1, 11):
    check = sondow_inequality_check(t, n, "5.45")
    print(f"{n:>3} {check.p_next:>8} {check.primorial:>18} {str(check.holds):>6}")
