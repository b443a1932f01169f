"""Exact integer helpers: gcd, factorization, prime sets and pi-parts."""

from __future__ import annotations

import math
from typing import Iterable


def _check_positive(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n!r}")


def gcd(a: int, b: int) -> int:
    _check_positive(a, "a")
    _check_positive(b, "b")
    return math.gcd(a, b)


def is_prime(n: int) -> bool:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Return ``{prime: exponent}`` for ``n``, primes in ascending order.

    Trial division; ``factorize(1) == {}``.
    """
    _check_positive(n)
    out: dict[int, int] = {}
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    if e:
        out[2] = e
    d = 3
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out[d] = e
        d += 2
    if n > 1:
        out[n] = 1
    return out


def pi_set(n: int) -> frozenset[int]:
    return frozenset(factorize(n))


def check_primes(pi: Iterable[int]) -> frozenset[int]:
    pi = frozenset(pi)
    bad = sorted(q for q in pi if not is_prime(q))
    if bad:
        raise ValueError(f"not prime: {bad}")
    return pi


def pi_part(n: int, pi: Iterable[int]) -> int:
    """Largest divisor of ``n`` whose prime divisors all lie in ``pi``."""
    _check_positive(n)
    pi = check_primes(pi)
    out = 1
    for q, e in factorize(n).items():
        if q in pi:
            out *= q**e
    return out


def is_pi_number(n: int, pi: Iterable[int]) -> bool:
    return pi_part(n, pi) == n


def is_prime_power(n: int) -> bool:
    """True for ``q**a`` with ``a >= 1``; 1 is not a prime power."""
    return len(factorize(n)) == 1


def smallest_prime_not_dividing(n: int) -> int:
    _check_positive(n)
    q = 2
    while n % q == 0 or not is_prime(q):
        q += 1
    return q
