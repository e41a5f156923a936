"""The Farey-like sequence of coprime square-prime pairs.

SPFarey_x holds every fraction sp1/sp2 with sp1 < sp2 <= x, both SP and
gcd(sp1, sp2) = 1.  Entries are pairs, not reals, so nothing is merged by
value.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np

from .core import SpNumber, sp_arrays
from .errors import DomainError, InvalidArgument
from .specfun import ZETA2, ZETA2_MINUS_1

ORDERS = ("lex", "value")


@dataclass(frozen=True)
class FareyEntry:
    num: SpNumber
    den: SpNumber

    def __post_init__(self):
        if not self.num.value < self.den.value:
            raise DomainError("numerator must be below denominator")
        if math.gcd(self.num.value, self.den.value) != 1:
            raise DomainError(f"{self.num.value}/{self.den.value} is not reduced")

    @property
    def value(self):
        return self.num.value / self.den.value

    @property
    def fraction(self):
        return Fraction(self.num.value, self.den.value)

    def __str__(self):
        return f"{self.num.value}/{self.den.value}"


def _coprime_pairs(v):
    """Index pairs (i, j), i < j, with gcd(v[i], v[j]) == 1, in lex order."""
    rows, cols = [], []
    for i in range(v.size - 1):
        hit = np.flatnonzero(np.gcd(v[i], v[i + 1 :]) == 1)
        if hit.size:
            rows.append(np.full(hit.size, i))
            cols.append(hit + i + 1)
    if not rows:
        return np.empty(0, dtype=int), np.empty(0, dtype=int)
    return np.concatenate(rows), np.concatenate(cols)


def sp_farey(x, sieve, order="lex"):
    """SPFarey_x as a list of FareyEntry.

    ``order="lex"`` sorts by (numerator, denominator); ``order="value"``
    sorts by the ratio, ties by (numerator, denominator).
    """
    if order not in ORDERS:
        raise InvalidArgument(f"order must be one of {ORDERS}, got {order!r}")
    v, p, a = sp_arrays(x, sieve)
    i, j = _coprime_pairs(v)
    if order == "value":
        def key(k):
            n, d = int(v[i[k]]), int(v[j[k]])
            return Fraction(n, d), n, d

        idx = sorted(range(i.size), key=key)
        i, j = i[idx], j[idx]
    sp = [SpNumber(int(a_), int(b_), int(c_)) for a_, b_, c_ in zip(v, p, a)]
    return [FareyEntry(sp[r], sp[c]) for r, c in zip(i, j)]


def _count_brute(v):
    total = 0
    for i in range(v.size - 1):
        total += int(np.count_nonzero(np.gcd(v[i], v[i + 1 :]) == 1))
    return total


def _mobius(n):
    mu = np.ones(n + 1, dtype=np.int8)
    mu[0] = 0
    is_comp = np.zeros(n + 1, dtype=bool)
    for p in range(2, n + 1):
        if is_comp[p]:
            continue
        is_comp[2 * p :: p] = True
        mu[p::p] *= -1
        mu[p * p :: p * p] = 0
    return mu


def _count_mobius(v, x):
    # coprime pairs = sum over d of mu(d) * C(c_d, 2), c_d = #values divisible by d
    if v.size < 2:
        return 0
    ind = np.zeros(x + 1, dtype=np.int64)
    ind[v] = 1
    mu = _mobius(x)
    total = 0
    for d in np.flatnonzero(mu):
        c = int(ind[d::d].sum())
        if c > 1:
            total += int(mu[d]) * (c * (c - 1) // 2)
    return total


def sp_farey_count(x, sieve, method="brute"):
    """Cardinality of SPFarey_x without building the entries.

    ``method="mobius"`` counts by inclusion-exclusion over divisors; it
    agrees with the pairwise gcd loop exactly.
    """
    v = sp_arrays(x, sieve)[0]
    if method == "brute":
        return _count_brute(v)
    if method == "mobius":
        return _count_mobius(v, int(x))
    raise InvalidArgument(f"unknown method {method!r}")


FAREY_COEFFICIENT = ZETA2_MINUS_1 ** 2 / (2 * ZETA2)


def sp_farey_estimate(x):
    """Leading term ((zeta(2)-1)^2 / (2 zeta(2))) x^2 / log^2 x."""
    if x < 3:
        raise DomainError(f"estimate needs x >= 3, got {x}")
    return FAREY_COEFFICIENT * x * x / math.log(x) ** 2


def sp_farey_lower_order(x):
    """The (zeta(2)-1)/zeta(2) * x/log x correction that accompanies the
    leading term in the published asymptotic.

    Diagnostic only: its derivation is not sound, so nothing is asserted
    about it.
    """
    if x < 3:
        raise DomainError(f"estimate needs x >= 3, got {x}")
    return ZETA2_MINUS_1 / ZETA2 * x / math.log(x)
