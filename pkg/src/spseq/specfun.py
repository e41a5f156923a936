"""Special functions and constants: zeta(2), Hurwitz zeta(2, q), the
Meissel-Mertens constant and a compensated summation helper."""

import math

import numpy as np

from .errors import DomainError, InvalidArgument

ZETA2 = math.pi ** 2 / 6
ZETA2_MINUS_1 = ZETA2 - 1.0

# Euler-Mascheroni constant, 0.57721566490153286061 (20 digits; float keeps ~17).
EULER_GAMMA = 0.57721566490153286061

MEISSEL_MERTENS = 0.26149721284764278


def zeta2():
    """Return zeta(2) = pi^2 / 6."""
    return ZETA2


class CompensatedSum:
    """Running Neumaier (improved Kahan) sum.

    >>> s = CompensatedSum()
    >>> for x in (1e16, 1.0, -1e16):
    ...     s.add(x)
    >>> s.value
    1.0
    """

    __slots__ = ("_s", "_c")

    def __init__(self, start=0.0):
        self._s = float(start)
        self._c = 0.0

    def add(self, x):
        s = self._s
        t = s + x
        if abs(s) >= abs(x):
            self._c += (s - t) + x
        else:
            self._c += (x - t) + s
        self._s = t

    def extend(self, xs):
        for x in xs:
            self.add(float(x))
        return self

    @property
    def value(self):
        return self._s + self._c


def compensated_sum(xs):
    """Neumaier-compensated sum of an iterable, in the order given."""
    return CompensatedSum().extend(xs).value


def _hurwitz_terms(q, tol):
    # Smallest N whose first neglected Euler-Maclaurin term 1/(30 (N+q)^5)
    # sits well under tol.
    n = max(10, math.ceil((1.0 / (30.0 * tol * 1e-2)) ** 0.2))
    return n


def hurwitz_zeta2(q, tol=1e-10):
    """Hurwitz zeta at s = 2: sum over n >= 0 of 1 / (n + q)^2, for 0 < q <= 1.

    Sums the first N terms directly and replaces the tail by its
    Euler-Maclaurin expansion::

        1/(N+q) + 1/(2 (N+q)^2) + 1/(6 (N+q)^3)

    The next term is 1/(30 (N+q)^5); N is chosen so that it is far below
    ``tol``.
    """
    q = float(q)
    if not (0.0 < q <= 1.0) or math.isnan(q):
        raise DomainError(f"hurwitz_zeta2 needs 0 < q <= 1, got {q!r}")
    n = _hurwitz_terms(q, tol)
    head = compensated_sum(1.0 / (k + q) ** 2 for k in range(n - 1, -1, -1))
    x = n + q
    tail = 1.0 / x + 0.5 / x ** 2 + 1.0 / (6.0 * x ** 3)
    return head + tail


def meissel_mertens(prime_limit, sieve):
    """Approximate M = gamma + sum over primes p <= prime_limit of
    log(1 - 1/p) + 1/p.

    Every term is negative, so the partial value decreases towards M as
    the limit grows; the truncation error is roughly 1/(2 L log L).
    """
    prime_limit = int(prime_limit)
    if prime_limit < 1000:
        raise InvalidArgument(f"prime_limit must be >= 1000, got {prime_limit}")
    if prime_limit > sieve.limit:
        raise InvalidArgument(f"prime_limit {prime_limit} exceeds sieve limit {sieve.limit}")
    p = sieve.primes_upto(prime_limit).astype(np.float64)
    terms = np.log1p(-1.0 / p) + 1.0 / p
    # smallest magnitudes first
    return EULER_GAMMA + compensated_sum(terms[::-1])
