"""
Listing square-prime numbers
============================

Every SP number splits uniquely as p * a**2, with p the squarefree kernel.
"""

from spseq import build_sieve, enumerate_sp, find_twins, is_sp, sp_decompose, squarefree_kernel

sieve = build_sieve(10_000)

# the first 25 values, with their decompositions
for sp in enumerate_sp(117, sieve):
    print(f"{sp.value:4d} = {sp.p} * {sp.a}^2")

# membership goes through the kernel: 72 = 2^3 * 3^2 has kernel 2
print(squarefree_kernel(72, sieve), is_sp(72, sieve), sp_decompose(108, sieve))

# consecutive pairs ("twins")
print([(t.lo.value, t.hi.value) for t in find_twins(500, sieve)])
