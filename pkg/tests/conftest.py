import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from primeth import TowerCache, iterate_prime

from oracle import sieve_primes


@pytest.fixture(scope="session")
def cache():
    """Shared in-memory tower cache; purely an accelerator, never an oracle."""
    return TowerCache()


@pytest.fixture(scope="session")
def primes_3e6():
    """Sieved primes to 3.1e6: covers every diagonal element through k = 7."""
    return sieve_primes(3_100_000)


@pytest.fixture(scope="session")
def primes_1e7():
    return sieve_primes(10_000_000)


@pytest.fixture(scope="session")
def towers_to_1e9(cache):
    """All towers for n <= 100 truncated at value 10^9, computed once."""
    out = {}
    for n in range(1, 101):
        tower = iterate_prime(n, 12, budget=10**9, cache=cache)
        out[n] = tower.values
    return out
