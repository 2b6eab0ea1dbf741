"""Prime generation, testing, counting and nth-prime lookup.

All results are exact.  The counting function uses a divide-count
recurrence over the distinct values of x // d, which runs in roughly
x^(3/4) time and keeps x around 10^12..10^13 feasible.  nth_prime brackets
the answer with the classical enclosure n log n < p_n < 2 n log n and
narrows the window by interpolation search on prime_count before a final
segmented sieve.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    InvalidRangeError,
    SegmentTooLargeError,
    UnsupportedRangeError,
)

# Segment budget counts tracked odd integers (one bit each).
DEFAULT_SEGMENT_BITS = 1 << 26
# Largest value covered by the in-memory base sieve; nth_prime answers
# indices whose value fits below this directly from the sieve.
_BASE_SIEVE_CAP = 1 << 27
# Window width at which bisection hands over to a segmented sieve.
_FINAL_SPAN = 2_000_000

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_base_primes = np.array([], dtype=np.int64)
_base_limit = 1


def _grow_base_sieve(limit):
    """Extend the cached prime list to cover [2, limit]."""
    global _base_primes, _base_limit
    if limit <= _base_limit:
        return
    # grow geometrically so repeated lookups do not re-sieve per call
    limit = min(max(limit, 1 << 16, 4 * _base_limit), _BASE_SIEVE_CAP)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    _base_primes = np.nonzero(flags)[0].astype(np.int64)
    _base_limit = limit


def base_primes_upto(limit):
    """Cached ascending primes covering at least [2, limit]."""
    if limit > _BASE_SIEVE_CAP:
        raise SegmentTooLargeError(
            f"base sieve capped at {_BASE_SIEVE_CAP}, asked for {limit}"
        )
    _grow_base_sieve(limit)
    cut = np.searchsorted(_base_primes, limit, side="right")
    return _base_primes[:cut]


@dataclass
class SegmentTable:
    """Primality flags for the odd integers of a closed range [lo, hi]."""

    lo: int
    hi: int
    first_odd: int
    flags: np.ndarray  # flags[i] <-> first_odd + 2*i is prime

    def primes(self):
        """Yield the primes of [lo, hi] in ascending order."""
        if self.lo <= 2 <= self.hi:
            yield 2
        for i in np.nonzero(self.flags)[0]:
            yield int(self.first_odd + 2 * i)

    def count(self):
        extra = 1 if self.lo <= 2 <= self.hi else 0
        return extra + int(np.count_nonzero(self.flags))

    def __contains__(self, m):
        if m < self.lo or m > self.hi:
            return False
        if m == 2:
            return True
        if m % 2 == 0:
            return False
        return bool(self.flags[(m - self.first_odd) // 2])


def sieve_segment(lo, hi, budget_bits=DEFAULT_SEGMENT_BITS):
    """Sieve the closed range [lo, hi]; flags exactly mark the primes."""
    lo, hi = int(lo), int(hi)
    if lo > hi:
        raise InvalidRangeError(f"lo={lo} > hi={hi}")
    if lo < 2:
        raise InvalidRangeError(f"lo={lo} < 2")
    first_odd = lo if lo % 2 else lo + 1
    n_odd = max(0, (hi - first_odd) // 2 + 1)
    if n_odd > budget_bits:
        raise SegmentTooLargeError(
            f"segment holds {n_odd} odd integers, budget is {budget_bits}"
        )
    flags = np.ones(n_odd, dtype=bool)
    if n_odd and first_odd == 1:
        flags[0] = False
    root = math.isqrt(hi)
    for p in base_primes_upto(root)[1:] if root >= 3 else []:
        p = int(p)
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start % 2 == 0:
            start += p
        if start > hi:
            continue
        flags[(start - first_odd) // 2 :: p] = False
    # an odd prime <= root inside the segment survives: only proper
    # multiples were struck (start >= p*p)
    return SegmentTable(lo=lo, hi=hi, first_odd=first_odd, flags=flags)


def is_prime(n):
    """Deterministic primality for 0 <= n < 2^64."""
    n = int(n)
    if n < 0:
        raise InvalidRangeError("primality is defined for non-negative integers")
    if n >= 1 << 64:
        raise UnsupportedRangeError(
            "deterministic witness set only covers n < 2^64"
        )
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_count(x):
    """Exact number of primes <= x (divide-count recurrence, ~x^(3/4))."""
    x = int(x)
    if x < 0:
        raise InvalidRangeError("prime_count requires x >= 0")
    if x >= 1 << 62:
        raise UnsupportedRangeError("prime_count limited to x < 2^62")
    if x < 2:
        return 0
    v = math.isqrt(x)
    hi = x // np.arange(1, v + 1, dtype=np.int64)  # hi[i] = x // (i+1)
    smalls = np.arange(-1, v, dtype=np.int64)  # smalls[i] = count(i) seed i-1
    larges = hi - 1  # larges[i] = count(x // (i+1))
    for p in range(2, v + 1):
        if smalls[p] == smalls[p - 1]:  # p already struck: composite
            continue
        sp = int(smalls[p - 1])  # primes below p
        p2 = p * p
        t = min(v, x // p2)
        if t >= 1:
            pj = p * np.arange(1, t + 1, dtype=np.int64)
            d = hi[:t] // p  # = x // (p*(i+1))
            use_small = pj > v
            lookup = np.where(
                use_small,
                smalls[np.minimum(d, v)],
                larges[np.minimum(pj, v) - 1],
            )
            larges[:t] -= lookup - sp
        if p2 <= v:
            idx = np.arange(p2, v + 1, dtype=np.int64)
            smalls[p2:] -= smalls[idx // p] - sp
    return int(larges[0])


def _bracket(n):
    """Open enclosure (n log n, 2 n log n) for p_n, valid for n >= 3."""
    ln = math.log(n)
    return int(n * ln), int(2 * n * ln) + 2


def nth_prime(n):
    """The nth prime (1-based): p_1 = 2, p_25 = 97."""
    n = int(n)
    if n < 1:
        raise InvalidRangeError("nth_prime requires n >= 1")
    if n == 1:
        return 2
    if n == 2:
        return 3
    lo, hi = _bracket(n)
    if hi <= _BASE_SIEVE_CAP:
        _grow_base_sieve(hi)
        return int(_base_primes[n - 1])
    return _nth_prime_by_count(n)


def _nth_prime_by_count(n):
    """Bracket + interpolation search on prime_count + final segment sieve."""
    lo, hi = _bracket(n)
    clo = prime_count(lo)  # < n since p_n > n log n
    chi = prime_count(hi)  # >= n since p_n < 2 n log n
    while hi - lo > _FINAL_SPAN:
        span = hi - lo
        # secant guess, clamped away from the ends to guarantee progress
        guess = lo + (n - clo) * span // max(1, chi - clo)
        guess = min(max(guess, lo + span // 20), hi - span // 20)
        c = prime_count(guess)
        if c >= n:
            hi, chi = guess, c
        else:
            lo, clo = guess, c
    seg = sieve_segment(lo + 1, hi)
    want = n - clo
    for p in seg.primes():
        want -= 1
        if want == 0:
            return p
    raise AssertionError("bracket invariant violated")  # pragma: no cover
