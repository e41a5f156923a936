from math import isqrt

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spseq import (
    DomainError,
    InvalidArgument,
    ResourceLimitError,
    SpNumber,
    TwinPair,
    build_sieve,
    enumerate_sp,
    find_twins,
    is_sp,
    largest_sp_below,
    sp_arrays,
    sp_decompose,
    squarefree_kernel,
)
from spseq.core import factorize

from conftest import PAPER_FIRST_25, brute_sp_set, trial_is_prime


def test_sieve_small_cases():
    s = build_sieve(10)
    assert s.spf(9) == 3 and s.spf(7) == 7
    assert build_sieve(2).spf(2) == 2
    s30 = build_sieve(30)
    assert [n for n in range(2, 31) if s30.spf(n) == n] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert s30.primes.tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_sieve_invariants():
    s = build_sieve(5000)
    for n in range(2, 5001):
        f = s.spf(n)
        if trial_is_prime(n):
            assert f == n
        else:
            assert n % f == 0 and trial_is_prime(f) and f * f <= n


def test_sieve_errors():
    with pytest.raises(InvalidArgument):
        build_sieve(1)
    with pytest.raises(ResourceLimitError):
        build_sieve(10_000, memory_cap=1000)


def test_sieve_is_read_only():
    s = build_sieve(100)
    with pytest.raises(ValueError):
        s.smallest_factor[4] = 3


@pytest.mark.parametrize("n, kernel", [(72, 2), (45, 5), (1, 1), (108, 3), (64, 1)])
def test_kernel_examples(small_sieve, n, kernel):
    assert squarefree_kernel(n, small_sieve) == kernel


def test_kernel_times_square():
    s = build_sieve(10_000)
    for n in range(1, 10_001):
        k = squarefree_kernel(n, s)
        q, r = divmod(n, k)
        assert r == 0 and isqrt(q) ** 2 == q


def test_kernel_out_of_range(small_sieve):
    for n in (0, small_sieve.limit + 1):
        with pytest.raises(InvalidArgument):
            squarefree_kernel(n, small_sieve)


@pytest.mark.parametrize("n, expected", [(8, True), (9, False), (7, False), (1, False), (75, True), (4, False)])
def test_is_sp_examples(small_sieve, n, expected):
    assert is_sp(n, small_sieve) is expected


@pytest.mark.parametrize("n, p, a", [(75, 3, 5), (108, 3, 6), (45, 5, 3)])
def test_decompose_paper_examples(small_sieve, n, p, a):
    assert sp_decompose(n, small_sieve) == SpNumber(n, p, a)


def test_decompose_rejects_non_sp(small_sieve):
    with pytest.raises(DomainError):
        sp_decompose(9, small_sieve)


def test_spnumber_validates():
    with pytest.raises(DomainError):
        SpNumber(12, 3, 1)
    with pytest.raises(DomainError):
        SpNumber(13, 3, 2)


def test_uniqueness_of_decomposition():
    limit = 100_000
    s = build_sieve(limit)
    seen = {}
    for a in range(2, isqrt(limit // 2) + 1):
        for p in s.primes_upto(limit // (a * a)).tolist():
            n = p * a * a
            assert n not in seen, (n, seen.get(n), (p, a))
            seen[n] = (p, a)
    for n, (p, a) in seen.items():
        assert is_sp(n, s)
        assert sp_decompose(n, s) == SpNumber(n, p, a)
    assert len(seen) == len(enumerate_sp(limit, s))


def test_enumerate_paper_list(small_sieve):
    assert [x.value for x in enumerate_sp(32, small_sieve)] == [8, 12, 18, 20, 27, 28, 32]
    assert [x.value for x in enumerate_sp(117, small_sieve)] == PAPER_FIRST_25
    assert enumerate_sp(7, small_sieve) == []


def test_enumerate_matches_brute_force(small_sieve):
    assert {x.value for x in enumerate_sp(3000, small_sieve)} == brute_sp_set(3000)


def test_enumerate_matches_membership():
    s = build_sieve(10_000)
    gen = {x.value for x in enumerate_sp(10_000, s)}
    assert gen == {n for n in range(1, 10_001) if is_sp(n, s)}


def test_enumerate_strictly_increasing(small_sieve):
    v = sp_arrays(small_sieve.limit, small_sieve)[0]
    assert np.all(np.diff(v) > 0)


@pytest.mark.parametrize("segments", [2, 3, 7, 50])
def test_segmented_enumeration_identical(small_sieve, segments):
    one = sp_arrays(small_sieve.limit, small_sieve)
    many = sp_arrays(small_sieve.limit, small_sieve, segments=segments)
    for x, y in zip(one, many):
        assert x.tobytes() == y.tobytes()


def test_enumerate_limit_above_sieve():
    with pytest.raises(InvalidArgument):
        enumerate_sp(200, build_sieve(100))


def test_find_twins(small_sieve):
    pairs = lambda L: [(t.lo.value, t.hi.value) for t in find_twins(L, small_sieve)]
    assert pairs(50) == [(27, 28), (44, 45)]
    assert pairs(117) == [(27, 28), (44, 45), (75, 76), (98, 99), (116, 117)]
    assert pairs(26) == []


def test_find_twins_equals_adjacent_scan(small_sieve):
    vals = [x.value for x in enumerate_sp(small_sieve.limit, small_sieve)]
    scan = [(a, b) for a, b in zip(vals, vals[1:]) if b - a == 1]
    assert [(t.lo.value, t.hi.value) for t in find_twins(small_sieve.limit, small_sieve)] == scan


def test_twinpair_validates():
    with pytest.raises(DomainError):
        TwinPair(SpNumber(8, 2, 2), SpNumber(12, 3, 2))


def test_largest_sp_below(small_sieve):
    assert largest_sp_below(50, small_sieve) == 48
    assert largest_sp_below(50, small_sieve, inclusive=True) == 50
    assert largest_sp_below(8, small_sieve) is None


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=100_000))
def test_factorize_roundtrip(n):
    s = _shared()
    prod = 1
    for p, e in factorize(n, s):
        assert trial_is_prime(p)
        prod *= p ** e
    assert prod == n


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=100_000))
def test_is_sp_matches_definition(n):
    s = _shared()
    by_def = any(
        n % (a * a) == 0 and trial_is_prime(n // (a * a)) for a in range(2, isqrt(n) + 1)
    )
    assert is_sp(n, s) == by_def


_CACHE = {}


def _shared():
    if "s" not in _CACHE:
        _CACHE["s"] = build_sieve(100_000)
    return _CACHE["s"]
