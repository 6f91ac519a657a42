"""Integer arithmetic for the base ring: gcd, factorization, primes.

The base ring is fixed to the integers.  :class:`IntegerRing` spells out the
small contract (Euclidean division, gcd, factorization) that the rest of the
library relies on, so that another Euclidean domain could be slotted in later.
"""

from __future__ import annotations

import math
from functools import lru_cache, reduce
from typing import Protocol

from .errors import ZeroFactorizationError

_SIEVE_LIMIT = 1 << 16


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * (_SIEVE_LIMIT + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(_SIEVE_LIMIT) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def gcd(a: int, b: int) -> int:
    """Nonnegative greatest common divisor; ``gcd(0, 0) == 0``."""
    a, b = abs(int(a)), abs(int(b))
    while b:
        a, b = b, a % b
    return a


def gcd_all(values) -> int:
    return reduce(gcd, values, 0)


def lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // gcd(a, b)


def factorize(n: int) -> list[tuple[int, int]]:
    """Factor ``n`` into primes by trial division.

    Args:
        n: a nonzero integer. The sign is discarded.

    Returns:
        A list of ``(prime, exponent)`` pairs with strictly increasing primes.
        Units factor as the empty list.

    Raises:
        ZeroFactorizationError: if ``n == 0``.
    """
    n = int(n)
    if n == 0:
        raise ZeroFactorizationError("cannot factor 0")
    n = abs(n)
    result = []
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            result.append((p, e))
    # past the sieve: odd trial divisors
    q = _small_primes()[-1] + 2
    while q * q <= n:
        if n % q == 0:
            e = 0
            while n % q == 0:
                n //= q
                e += 1
            result.append((q, e))
        q += 2
    if n > 1:
        result.append((n, 1))
    return result


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def omega(n: int) -> int:
    """Number of prime factors of ``n`` counted with multiplicity."""
    return sum(e for _, e in factorize(n))


def is_prime(n: int) -> bool:
    n = int(n)
    if n < 2:
        return False
    f = factorize(n)
    return len(f) == 1 and f[0][1] == 1


def check_prime(p: int) -> int:
    """Return ``p`` as a positive prime, raising ``ValueError`` otherwise."""
    p = abs(int(p))
    if not is_prime(p):
        raise ValueError(f"{p} is not a prime")
    return p


class EuclideanRing(Protocol):
    """What the algorithms need from the base ring."""

    tag: str

    def divmod(self, a, b): ...

    def gcd(self, a, b): ...

    def factorize(self, a): ...

    def normalize(self, a): ...


class IntegerRing:
    """The ring of integers, with canonical representatives ``|a|``."""

    tag = "ZZ"

    def divmod(self, a: int, b: int) -> tuple[int, int]:
        return divmod(a, b)

    def gcd(self, a: int, b: int) -> int:
        return gcd(a, b)

    def factorize(self, a: int) -> list[tuple[int, int]]:
        return factorize(a)

    def normalize(self, a: int) -> int:
        return abs(int(a))

    def __repr__(self):
        return "ZZ"


ZZ = IntegerRing()
