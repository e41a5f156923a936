from math import isqrt

import pytest

from spseq import build_sieve


@pytest.fixture(scope="session")
def small_sieve():
    return build_sieve(100_000)


@pytest.fixture(scope="session")
def big_sieve():
    return build_sieve(2_000_000)


def trial_is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


def brute_sp_set(limit):
    """SP numbers <= limit from the definition, using trial-division primes."""
    out = set()
    a = 2
    while 2 * a * a <= limit:
        for p in range(2, limit // (a * a) + 1):
            if trial_is_prime(p):
                out.add(p * a * a)
        a += 1
    return out


PAPER_FIRST_25 = [
    8, 12, 18, 20, 27, 28, 32, 44, 45, 48, 50, 52, 63, 68, 72,
    75, 76, 80, 92, 98, 99, 108, 112, 116, 117,
]



def pytest_terminal_summary(terminalreporter):
    lines = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            if rep.when == "call":
                lines += [v for k, v in getattr(rep, "user_properties", []) if k == "acceptance"]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda l: int(l.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
