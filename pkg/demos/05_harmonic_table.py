"""
SP harmonic sums
================

Partial sums of 1/sp against (pi^2/6 - 1) log log X.
"""

from spseq import (
    build_sieve,
    reproduce_table,
    sp_harmonic,
    sp_harmonic_double_sum,
    sp_harmonic_estimate,
    table_csv,
    twin_harmonic,
)

sieve = build_sieve(250_000)

print(table_csv(reproduce_table(sieve=sieve)))

# the same sum grouped by the square root a
k = 10**5
print(sp_harmonic(k, sieve), sp_harmonic_double_sum(k, sieve))

# main term with the Meissel-Mertens constant included
print(sp_harmonic_estimate(k, include_M=True).main)

print("twin sum up to 250000:", twin_harmonic(250_000, sieve))
