"""Counting function, asymptotic comparisons, last-digit census and
equidistribution diagnostics for the scaled point sets U_j = {sp / j}."""

from dataclasses import dataclass
import math

import numpy as np

from .core import sp_values
from .errors import DomainError, InvalidArgument, UndefinedFractionError
from .specfun import ZETA2_MINUS_1, hurwitz_zeta2


@dataclass(frozen=True)
class AsymptoticReport:
    checkpoint: int
    empirical: float
    estimate: float

    @property
    def ratio(self):
        return self.empirical / self.estimate


@dataclass(frozen=True)
class Interval:
    alpha: float
    beta: float

    def __post_init__(self):
        if not (0.0 <= self.alpha <= self.beta <= 1.0):
            raise InvalidArgument(f"need 0 <= alpha <= beta <= 1, got [{self.alpha}, {self.beta}]")


@dataclass(frozen=True)
class DigitCensus:
    limit: int
    counts: tuple

    @property
    def total(self):
        return sum(self.counts)


def sp_count(n, sieve):
    """Number of SP values m <= n (inclusive)."""
    return int(sp_values(n, sieve).size)


def sp_count_estimate(n):
    """Main term (zeta(2) - 1) n / log n of the counting function."""
    if n < 3:
        raise DomainError(f"estimate needs n >= 3, got {n}")
    return ZETA2_MINUS_1 * n / math.log(n)


def count_report(checkpoints, sieve):
    return [
        AsymptoticReport(int(x), float(sp_count(x, sieve)), sp_count_estimate(x))
        for x in checkpoints
    ]


def digit_census(limit, sieve):
    v = sp_values(limit, sieve)
    counts = np.bincount(v % 10, minlength=10)
    return DigitCensus(int(limit), tuple(int(c) for c in counts))


def digit1_constant():
    """(1/400) (zeta(2,1/10) + zeta(2,9/10) + zeta(2,3/10) + zeta(2,7/10) - 4)."""
    s = sum(hurwitz_zeta2(q) for q in (0.1, 0.9, 0.3, 0.7))
    return (s - 4.0) / 400.0


def digit1_estimate(n):
    """Estimated count of SP numbers <= n ending in the digit 1."""
    if n < 3:
        raise DomainError(f"estimate needs n >= 3, got {n}")
    return digit1_constant() * n / math.log(n)


def scaled_points(j, sieve):
    """Sorted points sp / j for every SP value sp <= j."""
    j = int(j)
    return sp_values(j, sieve) / j


def interval_fraction(j, interval, sieve):
    """Share of U_j lying in the closed interval [alpha, beta]."""
    if not isinstance(interval, Interval):
        interval = Interval(*interval)
    x = scaled_points(j, sieve)
    if x.size == 0:
        raise UndefinedFractionError(f"no SP numbers <= {j}")
    lo = np.searchsorted(x, interval.alpha, side="left")
    hi = np.searchsorted(x, interval.beta, side="right")
    return (hi - lo) / x.size


def point_set_discrepancy(points):
    """Star discrepancy of a finite set in [0, 1].

    D* = max_i max(i/N - x_i, x_i - (i-1)/N) over the sorted points.
    """
    x = np.sort(np.asarray(points, dtype=np.float64))
    n = x.size
    if n == 0:
        raise UndefinedFractionError("star discrepancy of an empty point set")
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - x), np.max(x - (i - 1) / n)))


def star_discrepancy(j, sieve):
    return point_set_discrepancy(scaled_points(j, sieve))
