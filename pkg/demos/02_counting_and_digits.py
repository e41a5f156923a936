"""
How many SP numbers are there?
==============================

SP(n) grows like (zeta(2) - 1) n / log n, but the approach is slow.
"""

from spseq import build_sieve, count_report, digit1_estimate, digit_census

sieve = build_sieve(2_000_000)

for r in count_report([10**3, 10**4, 10**5, 10**6, 2 * 10**6], sieve):
    print(f"n={r.checkpoint:>8}  SP(n)={int(r.empirical):>7}  main term={r.estimate:10.1f}  ratio={r.ratio:.4f}")

# last decimal digit; only digit 1 has a closed-form estimate
census = digit_census(10**6, sieve)
print(dict(enumerate(census.counts)))
print("digit 1: counted", census.counts[1], "estimated", round(digit1_estimate(10**6), 1))
