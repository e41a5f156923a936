"""
Scaling SP numbers into (0, 1]
==============================

U_j = {sp / j : sp <= j}.  Interval shares approach interval lengths.
"""

import numpy as np

from spseq import Interval, build_sieve, interval_fraction, star_discrepancy

sieve = build_sieve(1_000_000)

for j in (10**3, 10**4, 10**5, 10**6):
    print(j, round(star_discrepancy(j, sieve), 5))

j = 10**6
edges = np.linspace(0, 1, 5)
for lo, hi in zip(edges[:-1], edges[1:]):
    print(f"[{lo:.2f}, {hi:.2f}]  {interval_fraction(j, Interval(lo, hi), sieve):.4f}")
