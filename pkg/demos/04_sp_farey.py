"""
Coprime SP ratios
=================
"""

from spseq import build_sieve, sp_farey, sp_farey_count, sp_farey_estimate

sieve = build_sieve(10_000)

print([str(e) for e in sp_farey(50, sieve)])
print([str(e) for e in sp_farey(50, sieve, order="value")])

for x in (10**3, 10**4):
    n = sp_farey_count(x, sieve)
    print(x, n, round(n / sp_farey_estimate(x), 3))
