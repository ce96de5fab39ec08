"""E(p) = integral of w_p^* over Z_p for primes p >= 5."""
from __future__ import annotations

from fractions import Fraction

from ..arith import is_prime, legendre, unit_part, valuation
from ..errors import InvalidArgument
from ..family import check_s
from .region import REGIONS, Region


def _check_p(p: int) -> None:
    if not is_prime(p) or p < 5:
        raise InvalidArgument(f"expected a prime p >= 5, got {p}")


def measure_Sk_closed(p: int, s: int, k: int) -> Fraction:
    """Haar measure of {t : v(t) = v(s)/2, v(t^2 - s) = v(s) + k}."""
    check_s(s)
    _check_p(p)
    if k < 0:
        raise InvalidArgument("k must be nonnegative")
    v = valuation(s, p)
    if v % 2:
        return Fraction(0)
    half = v // 2
    square = legendre(unit_part(s, p), p) == 1
    if k == 0:
        return Fraction(p - 3 if square else p - 1, p ** (half + 1))
    if not square:
        return Fraction(0)
    return Fraction(2 * (p - 1), p ** (half + k + 1))


def _less_than(p: int, v: int) -> Fraction:
    minus_one = legendre(-1, p)
    if v <= 2:
        return Fraction(0)
    if v <= 6:
        return Fraction(minus_one * (p - 1), p * p)
    alpha = (v - 2) // 4
    exponent = 2 * alpha if v % 4 == 2 else 2 * alpha + 2
    return minus_one * Fraction(1, p + 1) * (1 - Fraction(1, p**exponent))


def _greater_than(p: int, v: int) -> Fraction:
    if v % 2 == 0:
        return Fraction(legendre(-1, p) ** (v // 2), p ** (v // 2 + 1))
    return Fraction(legendre(2, p), p ** ((v + 1) // 2))


def _equal(p: int, v: int, s_unit: int) -> Fraction:
    if v % 2:
        return Fraction(0)
    j = v % 4
    h = j // 2
    sign = legendre(-1, p) ** h
    scale = Fraction(sign, p ** (v // 2 + 1))
    if legendre(s_unit, p) == -1 or p % 3 == 1:
        return scale * (p - 1)
    correction = Fraction(
        4 * (-1) ** h * (p**4 + h * p**3 + p**2 + h),
        (p + 1) * (p**4 + p**2 + 1),
    )
    return scale * (p - (2 * j + 1) - correction)


def factor_ge5_region(p: int, s: int, region: Region) -> Fraction:
    check_s(s)
    _check_p(p)
    v = valuation(s, p)
    if region is Region.LESS_THAN:
        return _less_than(p, v)
    if region is Region.GREATER_THAN:
        return _greater_than(p, v)
    if region is Region.EQUAL:
        return _equal(p, v, unit_part(s, p))
    raise InvalidArgument(f"unknown region {region!r}")


def factor_ge5(p: int, s: int) -> Fraction:
    return sum((factor_ge5_region(p, s, r) for r in REGIONS), Fraction(0))


def factor_ge5_nu0(p: int, s: int) -> Fraction:
    """Simplified E(p) valid when p does not divide 6s."""
    check_s(s)
    _check_p(p)
    if s % p == 0:
        raise InvalidArgument(f"{p} divides s={s}")
    if legendre(s, p) == -1 or p % 3 == 1:
        return Fraction(1)
    return 1 - Fraction(4 * p * (p * p + 1), (p + 1) * (p**4 + p * p + 1))
