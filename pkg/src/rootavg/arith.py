"""Exact integer primitives: valuations, unit parts, characters, factorization.

Valuations of 0 are ``INFINITE`` (``math.inf``), which orders above every
integer and survives the ``2 * v`` comparisons used in the branch dispatch.
"""
from __future__ import annotations

import math
from functools import lru_cache

from sympy import factorint, isprime

from .errors import InvalidArgument

INFINITE = math.inf


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    return p >= 2 and bool(isprime(p))


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidArgument(f"{p!r} is not a prime")


def valuation(n: int, p: int) -> int | float:
    """Largest e with p**e | n; ``INFINITE`` for n == 0."""
    _require_prime(p)
    if n == 0:
        return INFINITE
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def unit_part(n: int, p: int) -> int:
    """n / p**valuation(n, p); keeps the sign of n."""
    if n == 0:
        raise InvalidArgument("unit part of 0 is undefined")
    return n // p ** valuation(n, p)


def legendre(a: int, p: int) -> int:
    if p == 2:
        raise InvalidArgument("Legendre symbol needs an odd prime")
    _require_prime(p)
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def liouville(n: int) -> int:
    if n == 0:
        raise InvalidArgument("liouville(0) is undefined")
    omega = sum(e for _, e in factorize(n))
    return -1 if omega % 2 else 1


def chi3(u: int) -> int:
    """Non-principal character mod 3."""
    if u % 3 == 0:
        raise InvalidArgument(f"chi3 undefined at {u} (divisible by 3)")
    return 1 if u % 3 == 1 else -1


def chi4(u: int) -> int:
    """Non-principal character mod 4."""
    if u % 2 == 0:
        raise InvalidArgument(f"chi4 undefined at even {u}")
    return 1 if u % 4 == 1 else -1


@lru_cache(maxsize=4096)
def _factor_abs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(factorint(n).items()))


def factorize(n: int) -> list[tuple[int, int]]:
    """Factorization of |n| as ascending (prime, exponent) pairs."""
    if n == 0:
        raise InvalidArgument("cannot factor 0")
    return list(_factor_abs(abs(n)))


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]
