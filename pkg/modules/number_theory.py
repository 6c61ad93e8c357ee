# -*- coding: utf-8 -*-
"""
Number Theory Utilities
gcd/lcm order rules, divisors, primality and a shared totient sieve
"""

import threading
import logging
from math import gcd, lcm
from typing import Iterable, List

from config.settings import UINT64_MAX

logger = logging.getLogger(__name__)


def cyclic_order(n: int, b: int) -> int:
    """Order of residue b in Z_n: n / gcd(n, b)"""
    return n // gcd(n, b % n)


def lcm_all(values: Iterable[int]) -> int:
    """lcm of a sequence, 1 for an empty one"""
    return lcm(1, *values)


def divisors(n: int) -> List[int]:
    """Ascending divisors of n >= 1 by trial division"""
    if n < 1:
        raise ValueError(f"divisors() needs n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def fits_uint64(value: int) -> bool:
    return 0 <= value <= UINT64_MAX


# Deterministic Miller-Rabin bases for all 64-bit inputs
_MR_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)


def is_prime(n: int) -> bool:
    if n <= 3:
        return n > 1
    if n % 2 == 0:
        return False

    # n - 1 = d * 2^s with d odd
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    for a in _MR_WITNESSES:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_odd_prime(p: int) -> bool:
    return p != 2 and is_prime(p)


class TotientSieve:
    """
    Euler's phi for every integer up to a limit, via the linear sieve.

    The table only grows. Reads of an already covered range never take
    the lock; growth is serialized so concurrent callers share one table.
    """

    def __init__(self):
        self._phi: List[int] = [0, 1]
        self._lock = threading.Lock()

    @property
    def limit(self) -> int:
        return len(self._phi) - 1

    def ensure(self, limit: int) -> None:
        if limit <= self.limit:
            return
        with self._lock:
            if limit <= self.limit:
                return
            # Rebuild at the next power of two above the request
            size = 1
            while size < limit:
                size *= 2
            self._phi = self._linear_sieve(size)
            logger.debug(f"Totient sieve grown to {size}")

    @staticmethod
    def _linear_sieve(limit: int) -> List[int]:
        phi = [0] * (limit + 1)
        if limit >= 1:
            phi[1] = 1
        primes: List[int] = []
        is_composite = bytearray(limit + 1)

        for i in range(2, limit + 1):
            if not is_composite[i]:
                primes.append(i)
                phi[i] = i - 1
            for p in primes:
                ip = i * p
                if ip > limit:
                    break
                is_composite[ip] = 1
                if i % p == 0:
                    phi[ip] = phi[i] * p
                    break
                phi[ip] = phi[i] * (p - 1)
        return phi

    def phi(self, d: int) -> int:
        if d < 1:
            raise ValueError(f"phi() needs d >= 1, got {d}")
        self.ensure(d)
        return self._phi[d]


# Process-wide sieve instance
totient_sieve = TotientSieve()


def totient(d: int) -> int:
    return totient_sieve.phi(d)
