"""E(2) = integral of w_2^* over Z_2.

As for p = 3, the region functions are rebuilt from the per-case
derivations (v(s) mod 4 cases, individual sub-integrals with an explicit
finite sum, per-residue results) while ``factor_2_summary`` evaluates the
collapsed table.  The two must agree.
"""
from __future__ import annotations

from fractions import Fraction

from ..arith import chi4, unit_part, valuation
from ..errors import InvalidArgument
from ..family import check_s
from .region import REGIONS, Region


def _greater_than(v: int, u: int) -> Fraction:
    if v % 2 == 0:
        return Fraction(0)
    scale = Fraction(chi4(u), 2 ** ((v + 3) // 2))
    if v % 4 == 1:
        return scale if u % 8 in (1, 3) else -scale
    return scale if u % 8 in (5, 7) else -scale


def _less_than(v: int, u: int) -> Fraction:
    total = Fraction(0)
    # v(s) - 2v(t) = 2, v(t) even
    if v % 4 == 2:
        total += Fraction(1 if u % 4 == 1 else -2, 2 ** (v // 2 + 1))
    # = 4, v(t) even
    if v % 4 == 0 and v >= 4:
        total += Fraction(1, 2 ** (v // 2))
    # = 5, v(t) even
    if v % 4 == 1 and v >= 5:
        total += Fraction(1, 2 ** ((v - 1) // 2))
    # >= 7, v(t) even
    for k in range(7, v + 1):
        if (k - v) % 4 == 0:
            total += Fraction(-2, 2 ** ((v - k) // 2 + 3))
    # = 3, v(t) odd
    if v % 4 == 1 and v >= 5:
        total += Fraction(-chi4(u), 2 ** ((v - 1) // 2))
    # remaining pieces vanish; the k = 1 pieces would carry a factor -1
    return total


def _equal(v: int, u: int) -> Fraction:
    if v % 2:
        return Fraction(0)
    big = Fraction(1, 2 ** (v // 2 + 1))
    small = Fraction(1, 2 ** (v // 2 + 2))
    if u % 4 == 3:
        # only k = 1 contributes
        if v % 4 == 2 or u % 8 == 3:
            return Fraction(0)
        return -big if u % 16 == 7 else big
    if u % 8 == 5:
        # only k = 2 contributes
        if v % 4 == 0:
            return Fraction(0)
        return small if u % 16 == 5 else big
    # u = 1 mod 8: k >= 3, everything cancels except when v = 2 mod 4
    return Fraction(0) if v % 4 == 0 else -small


def factor_2_region(s: int, region: Region) -> Fraction:
    check_s(s)
    v = valuation(s, 2)
    u = unit_part(s, 2)
    if region is Region.GREATER_THAN:
        return _greater_than(v, u)
    if region is Region.LESS_THAN:
        return _less_than(v, u)
    if region is Region.EQUAL:
        return _equal(v, u)
    raise InvalidArgument(f"unknown region {region!r}")


def factor_2(s: int) -> Fraction:
    return sum((factor_2_region(s, r) for r in REGIONS), Fraction(0))


def factor_2_summary(s: int) -> Fraction:
    check_s(s)
    v = valuation(s, 2)
    u = unit_part(s, 2)
    j = v % 4

    if v % 2 == 0:
        first = Fraction(0)
    else:
        first = Fraction((-1) ** ((v - 1) // 2), 2 ** ((v + 3) // 2))
        if u % 8 in (3, 5):
            first = -first

    mod4 = 1 if u % 4 == 1 else -2
    if v in (0, 1, 3):
        second = Fraction(0)
    elif v == 2:
        second = Fraction(mod4, 4)
    elif v == 4:
        second = Fraction(1, 4)
    elif v == 5:
        second = Fraction(1 - chi4(u), 4)
    elif v == 6:
        second = Fraction(mod4, 16)
    else:
        ceil_term = (7 - j + 3) // 4
        second = (Fraction(2 ** (2 * ceil_term), 2 ** ((v - j) // 2 + 2)) - 1) / 3
        scale = Fraction(1, 2 ** ((v - j) // 2))
        if j == 0:
            second += scale
        elif j == 1:
            second += scale * (1 - chi4(u))
        elif j == 2:
            second += scale * (Fraction(1, 4) if u % 4 == 1 else Fraction(-1, 2))

    if v % 2:
        third = Fraction(0)
    elif j == 0:
        if u % 8 in (1, 3, 5):
            third = Fraction(0)
        elif u % 16 == 7:
            third = Fraction(-1, 2 ** (v // 2 + 1))
        else:
            third = Fraction(1, 2 ** (v // 2 + 1))
    else:
        if u % 4 == 3:
            third = Fraction(0)
        elif u % 8 == 1:
            third = Fraction(-1, 2 ** (v // 2 + 2))
        elif u % 16 == 5:
            third = Fraction(1, 2 ** (v // 2 + 2))
        else:
            third = Fraction(1, 2 ** (v // 2 + 1))

    return first + second + third
