"""
Constants behind the estimates
==============================
"""

import math

from spseq import MEISSEL_MERTENS, build_sieve, hurwitz_zeta2, meissel_mertens

print(hurwitz_zeta2(1.0), math.pi**2 / 6)
print(hurwitz_zeta2(0.5), math.pi**2 / 2)
print([round(hurwitz_zeta2(q), 10) for q in (0.1, 0.3, 0.7, 0.9)])

sieve = build_sieve(10**6)
for L in (10**3, 10**4, 10**5, 10**6):
    print(L, meissel_mertens(L, sieve) - MEISSEL_MERTENS)
