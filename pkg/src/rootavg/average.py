"""Average root number Av = -prod_p E(p) with a rigorous truncation interval.

For p not dividing 6s, E(p) is 1 unless (s/p) = 1 and p = 2 mod 3, in which
case E(p) = 1 - 4p(p^2+1)/((p+1)(p^4+p^2+1)), a number in (1 - 5/p^2, 1).
So the product over p > P lies in [1 - sum_{p>P} 5/p^2, 1], and that sum is
below 5/P.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from sympy import primerange

from .arith import legendre, prime_divisors
from .errors import InvalidArgument
from .factors import factor_ge5_nu0, local_factor
from .family import check_s

DEFAULT_CUTOFF = 100_000


@lru_cache(maxsize=8)
def _primes_from_5(cutoff: int) -> tuple[int, ...]:
    return tuple(primerange(5, cutoff + 1))


def exceptional_primes(s: int) -> list[int]:
    """Primes dividing 6s, ascending; always contains 2 and 3."""
    check_s(s)
    return prime_divisors(6 * s)


def tail_lower_bound(cutoff: int) -> Fraction:
    if cutoff < 5:
        raise InvalidArgument("cutoff must be >= 5")
    return 1 - Fraction(5, cutoff)


def generic_factors(s: int, cutoff: int) -> list[tuple[int, Fraction]]:
    """E(p) for 5 <= p <= cutoff, p not dividing s, keeping only those != 1."""
    out = []
    for p in _primes_from_5(cutoff):
        if p % 3 != 2 or s % p == 0:
            continue
        if legendre(s, p) == 1:
            out.append((p, factor_ge5_nu0(p, s)))
    return out


@dataclass(frozen=True)
class AverageResult:
    s: int
    cutoff: int
    exceptional_factors: list[tuple[int, Fraction]]
    generic_factors: list[tuple[int, Fraction]] = field(repr=False)
    lo: Fraction = field(repr=False)
    hi: Fraction = field(repr=False)
    parity_biased: bool
    average_sign: int

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self.lo, self.hi

    def factor(self, p: int) -> Fraction:
        for q, f in self.exceptional_factors:
            if q == p:
                return f
        for q, f in self.generic_factors:
            if q == p:
                return f
        return Fraction(1)


def _product(factors) -> Fraction:
    num = math.prod(f.numerator for _, f in factors)
    den = math.prod(f.denominator for _, f in factors)
    return Fraction(num, den)


def average(s: int, cutoff: int = DEFAULT_CUTOFF) -> AverageResult:
    check_s(s)
    tail = tail_lower_bound(cutoff)
    exceptional = [(p, local_factor(p, s)) for p in exceptional_primes(s)]
    generic = generic_factors(s, cutoff)
    finite = -_product(exceptional + generic)
    lo, hi = sorted((finite, finite * tail))
    biased = all(f != 0 for _, f in exceptional)
    sign = (finite > 0) - (finite < 0)
    return AverageResult(s, cutoff, exceptional, generic, lo, hi, biased, sign)


def is_parity_biased(s: int) -> bool:
    """Exact zero test on E(p) for p | 6s; every other factor is positive."""
    return all(local_factor(p, s) != 0 for p in exceptional_primes(s))
