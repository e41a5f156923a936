"""Prime sieve, square-prime membership, decomposition and enumeration.

A square-prime (SP) number is n = p * a**2 with p prime and a >= 2.  The
decomposition is unique: p must be the squarefree kernel of n (the product
of the primes dividing n to an odd power), and a is then forced.  So n is SP
exactly when its kernel is prime and n differs from its kernel.
"""

from dataclasses import dataclass, field
from math import isqrt
import os

import numpy as np

from .errors import DomainError, InvalidArgument, ResourceLimitError

# Bytes allowed for the smallest-factor table; override with SPSEQ_SIEVE_MEMORY_CAP.
DEFAULT_MEMORY_CAP = 1 << 31


def _memory_cap():
    env = os.environ.get("SPSEQ_SIEVE_MEMORY_CAP")
    return int(env) if env else DEFAULT_MEMORY_CAP


def _table_dtype(limit):
    return np.uint32 if limit < 2 ** 32 else np.uint64


@dataclass(frozen=True, eq=False)
class PrimeSieve:
    """Smallest-prime-factor table for 0..limit.

    ``smallest_factor[1] == 1``; entry 0 is unused (0).  The array is marked
    read-only, so one sieve can be shared freely between threads.
    """

    limit: int
    smallest_factor: np.ndarray = field(repr=False)
    _primes: np.ndarray = field(repr=False)

    def spf(self, n):
        self._check(n)
        return int(self.smallest_factor[n])

    def is_prime(self, n):
        self._check(n)
        return n >= 2 and int(self.smallest_factor[n]) == n

    @property
    def primes(self):
        return self._primes

    def primes_upto(self, x):
        return self._primes[: np.searchsorted(self._primes, x, side="right")]

    def _check(self, n):
        if not (1 <= n <= self.limit):
            raise InvalidArgument(f"n={n} outside 1..{self.limit}")


def build_sieve(limit, memory_cap=None):
    limit = int(limit)
    if limit < 2:
        raise InvalidArgument(f"sieve limit must be >= 2, got {limit}")
    dtype = _table_dtype(limit)
    need = (limit + 1) * np.dtype(dtype).itemsize
    cap = _memory_cap() if memory_cap is None else memory_cap
    if need > cap:
        raise ResourceLimitError(
            f"sieve to {limit} needs ~{need} bytes, cap is {cap} bytes"
        )
    spf = np.zeros(limit + 1, dtype=dtype)
    spf[1] = 1
    for p in range(2, isqrt(limit) + 1):
        if spf[p]:
            continue
        row = spf[p * p :: p]
        row[row == 0] = p
    rest = np.flatnonzero(spf == 0)
    rest = rest[rest >= 2]
    spf[rest] = rest
    primes = np.flatnonzero(spf == np.arange(limit + 1, dtype=dtype))
    primes = primes[primes >= 2].astype(np.int64)
    spf.setflags(write=False)
    primes.setflags(write=False)
    return PrimeSieve(limit, spf, primes)


@dataclass(frozen=True, order=True)
class SpNumber:
    value: int
    p: int
    a: int

    def __post_init__(self):
        if self.a < 2:
            raise DomainError(f"a must be >= 2, got {self.a}")
        if self.p * self.a * self.a != self.value:
            raise DomainError(f"{self.p} * {self.a}^2 != {self.value}")


@dataclass(frozen=True)
class TwinPair:
    lo: SpNumber
    hi: SpNumber

    def __post_init__(self):
        if self.hi.value - self.lo.value != 1:
            raise DomainError(f"({self.lo.value}, {self.hi.value}) are not consecutive")


def factorize(n, sieve):
    """Yield (prime, exponent) pairs of n using the smallest-factor table."""
    sieve._check(n)
    spf = sieve.smallest_factor
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        yield p, e


def squarefree_kernel(n, sieve):
    """Product of the primes dividing n to an odd power.

    >>> s = build_sieve(100)
    >>> squarefree_kernel(72, s), squarefree_kernel(45, s), squarefree_kernel(1, s)
    (2, 5, 1)
    """
    k = 1
    for p, e in factorize(n, sieve):
        if e & 1:
            k *= p
    return k


def is_sp(n, sieve):
    """True iff n = p * a**2 with p prime and a >= 2.

    A prime kernel k makes n / k a perfect square; requiring n != k rules
    out a = 1.
    """
    k = squarefree_kernel(n, sieve)
    return k != n and sieve.is_prime(k)


def sp_decompose(n, sieve):
    if not is_sp(n, sieve):
        raise DomainError(f"{n} is not a square-prime number")
    p = squarefree_kernel(n, sieve)
    a = isqrt(n // p)
    return SpNumber(n, p, a)


def _check_limit(limit, sieve):
    limit = int(limit)
    if limit > sieve.limit:
        raise InvalidArgument(f"limit {limit} exceeds sieve limit {sieve.limit}")
    return limit


def max_root(limit):
    """Largest a with 2 * a**2 <= limit."""
    return isqrt(max(limit, 0) // 2)


def sp_segment(limit, sieve, a_lo=2, a_hi=None):
    """Unsorted (values, p, a) arrays for every pair with a_lo <= a <= a_hi
    and p * a**2 <= limit.

    Distinct pairs give distinct values, so segments over disjoint a-ranges
    never overlap.
    """
    limit = _check_limit(limit, sieve)
    top = max_root(limit)
    a_hi = top if a_hi is None else min(a_hi, top)
    vals, ps, roots = [], [], []
    for a in range(max(a_lo, 2), a_hi + 1):
        sq = a * a
        pr = sieve.primes_upto(limit // sq)
        # p <= limit / a^2 keeps p * a^2 <= limit < 2^63
        vals.append(pr * sq)
        ps.append(pr)
        roots.append(np.full(pr.size, a, dtype=np.int64))
    if not vals:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty.copy(), empty.copy()
    return np.concatenate(vals), np.concatenate(ps), np.concatenate(roots)


def merge_segments(segments):
    """Merge (values, p, a) segments into one array triple sorted by value."""
    segments = list(segments)
    if not segments:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty.copy(), empty.copy()
    v = np.concatenate([s[0] for s in segments])
    p = np.concatenate([s[1] for s in segments])
    a = np.concatenate([s[2] for s in segments])
    order = np.argsort(v, kind="stable")
    return v[order], p[order], a[order]


def sp_arrays(limit, sieve, segments=1):
    """Sorted SP values <= limit with their (p, a), as int64 arrays.

    ``segments`` splits the a-range into that many chunks before merging;
    the result does not depend on it.
    """
    limit = _check_limit(limit, sieve)
    top = max_root(limit)
    if segments <= 1 or top < 2:
        return merge_segments([sp_segment(limit, sieve)])
    bounds = np.linspace(2, top + 1, segments + 1).astype(int)
    parts = [
        sp_segment(limit, sieve, lo, hi - 1)
        for lo, hi in zip(bounds[:-1], bounds[1:])
        if hi > lo
    ]
    return merge_segments(parts)


def sp_values(limit, sieve):
    return sp_arrays(limit, sieve)[0]


def enumerate_sp(limit, sieve, segments=1):
    """All SP numbers <= limit in increasing order."""
    v, p, a = sp_arrays(limit, sieve, segments)
    return [SpNumber(int(x), int(y), int(z)) for x, y, z in zip(v, p, a)]


def twin_starts(values):
    """Indices i with values[i + 1] == values[i] + 1 in a sorted array."""
    values = np.asarray(values)
    return np.flatnonzero(np.diff(values) == 1)


def find_twins(limit, sieve):
    v, p, a = sp_arrays(limit, sieve)
    return [
        TwinPair(
            SpNumber(int(v[i]), int(p[i]), int(a[i])),
            SpNumber(int(v[i + 1]), int(p[i + 1]), int(a[i + 1])),
        )
        for i in twin_starts(v)
    ]


def largest_sp_below(j, sieve, inclusive=False):
    """Largest SP value < j (or <= j when inclusive); None if there is none.

    This is the "largest SP number lesser than j" reading of the bound used
    for the scaled families U_j.  The number of such values is ``sp_count``.
    """
    j = int(j)
    v = sp_values(j if inclusive else j - 1, sieve)
    return int(v[-1]) if v.size else None
