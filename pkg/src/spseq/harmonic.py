"""Harmonic partial sums over square-prime numbers.

SPHarmonic(k) is the sum of 1/sp over SP values sp <= k.  Grouping the
terms by the square root a gives the double sum

    sum_{1 < a <= sqrt(k/2)} (1/a^2) sum_{p <= k/a^2} 1/p

which is evaluated separately as a cross-check.
"""

from dataclasses import dataclass
import math

import numpy as np

from .core import _check_limit, max_root, sp_values, twin_starts
from .errors import DomainError
from .specfun import MEISSEL_MERTENS, ZETA2_MINUS_1, CompensatedSum, compensated_sum

DEFAULT_CHECKPOINTS = (100, 1000, 10000, 100000, 250000)
TABLE_HEADER = "X,sp_harmonic,estimate_main_term"


@dataclass(frozen=True)
class TableRow:
    X: int
    actual: float
    estimate: float

    def rounded(self, places=4):
        return f"{self.actual:.{places}f}", f"{self.estimate:.{places}f}"


@dataclass(frozen=True)
class HarmonicEstimate:
    k: float
    main: float
    with_M: bool
    M: float = MEISSEL_MERTENS


def sp_harmonic(k, sieve):
    """Compensated ascending sum of 1/sp over SP values sp <= k."""
    v = sp_values(k, sieve)
    return compensated_sum(1.0 / v)


def sp_harmonic_double_sum(k, sieve, literal=False):
    """Evaluate SPHarmonic(k) as a sum over a of (1/a^2) * sum_{p <= k/a^2} 1/p.

    With ``literal=True`` the 1/a^2 weight is dropped, giving the plain
    sum of 1/p over all admissible (p, a) pairs.  That quantity is not
    SPHarmonic(k); it is kept as a diagnostic.
    """
    k = _check_limit(k, sieve)
    outer = CompensatedSum()
    for a in range(2, max_root(k) + 1):
        pr = sieve.primes_upto(k // (a * a))
        inner = compensated_sum(1.0 / pr[::-1])
        outer.add(inner if literal else inner / (a * a))
    return outer.value


def sp_harmonic_estimate(k, include_M=False):
    """(pi^2/6 - 1)(log log k [+ M]), natural logarithms."""
    if k <= math.e:
        raise DomainError(f"estimate needs k > e, got {k}")
    ll = math.log(math.log(k))
    main = ZETA2_MINUS_1 * (ll + MEISSEL_MERTENS if include_M else ll)
    return HarmonicEstimate(k, main, bool(include_M))


def reproduce_table(checkpoints=DEFAULT_CHECKPOINTS, sieve=None):
    if sieve is None:
        from .core import build_sieve

        sieve = build_sieve(max(max(checkpoints), 2))
    return [
        TableRow(int(x), sp_harmonic(x, sieve), sp_harmonic_estimate(x).main)
        for x in checkpoints
    ]


def table_csv(rows, places=4):
    lines = [TABLE_HEADER]
    for r in rows:
        actual, est = r.rounded(places)
        lines.append(f"{r.X},{actual},{est}")
    return "\n".join(lines) + "\n"


def twin_reciprocal_sum(values):
    """Sum 1/s + 1/(s+1) over adjacent pairs of a sorted value list.

    A value that belongs to two pairs (three consecutive members) is
    counted once per pair.
    """
    v = np.asarray(values, dtype=np.int64)
    acc = CompensatedSum()
    for i in twin_starts(v):
        acc.add(1.0 / v[i])
        acc.add(1.0 / v[i + 1])
    return acc.value


def twin_harmonic(limit, sieve):
    return twin_reciprocal_sum(sp_values(limit, sieve))


def divergence_lower_bound(k, sieve, squared=True):
    """(1/4) * sum of 1/p over primes p with 4 p^2 <= k.

    Each 1/(4p) is the reciprocal of the SP value 2^2 * p, so the full
    quarter prime harmonic series sits inside the SP harmonic series.
    ``squared=False`` uses the natural cut 4p <= k (the largest such
    subseries); the default cut 4 p^2 <= k is smaller still.
    """
    k = _check_limit(k, sieve)
    top = math.isqrt(k // 4) if squared else k // 4
    pr = sieve.primes_upto(top)
    return 0.25 * compensated_sum(1.0 / pr[::-1])
