"""E(3) = integral of w_3^* over Z_3.

Two independent transcriptions are kept on purpose.  ``factor_3_region``
rebuilds each region from its sub-integrals (explicit finite sums and
geometric series); ``factor_3_summary`` evaluates the collapsed
three-addend table directly.  Tests require them to agree.
"""
from __future__ import annotations

from fractions import Fraction

from ..arith import chi3, unit_part, valuation
from ..errors import InvalidArgument
from ..family import check_s
from .region import REGIONS, Region, geometric_tail


def _greater_than(v: int, u: int) -> Fraction:
    if v % 2 == 0:
        return Fraction(1, 3 ** (v // 2 + 2))
    if v % 4 == 1:
        return Fraction(1 - 2 * chi3(u), 3 ** ((v + 3) // 2))
    return Fraction(-1, 3 ** ((v + 1) // 2))


def _less_than(v: int, u: int) -> Fraction:
    # v(s) - 2v(t) = 1, v(t) even
    total = Fraction(0)
    if v % 4 == 1:
        total += Fraction(2, 3 ** ((v + 1) // 2))
    # v(s) - 2v(t) >= 3, v(t) even
    for k in range(3, v + 1):
        if (k - v) % 4 == 0:
            total += Fraction(-2, 3 ** ((v - k) // 2 + 1))
    # v(s) - 2v(t) = 1, v(t) odd
    if v % 4 == 3:
        total += Fraction(2 * chi3(u), 3 ** ((v + 1) // 2))
    # v(s) - 2v(t) = 3, v(t) odd
    if v % 4 == 1 and v >= 5:
        total += Fraction(2, 3 ** ((v - 1) // 2))
    # the "= 2" pieces and the odd "\geq 4" piece vanish
    return total


def _equal(v: int, u: int) -> Fraction:
    if v % 2:
        return Fraction(0)
    base = 3 ** (v // 2 + 2)
    if u % 3 == 2:
        return Fraction(2, base)
    # only k = 3, 6, 9, ... contribute (-1)^k * 4 / 3^(v/2 + k + 2)
    first = Fraction(-4, base * 3**3)
    return geometric_tail(first, Fraction(-1, 27))


def factor_3_region(s: int, region: Region) -> Fraction:
    check_s(s)
    v = valuation(s, 3)
    u = unit_part(s, 3)
    if region is Region.GREATER_THAN:
        return _greater_than(v, u)
    if region is Region.LESS_THAN:
        return _less_than(v, u)
    if region is Region.EQUAL:
        return _equal(v, u)
    raise InvalidArgument(f"unknown region {region!r}")


def factor_3(s: int) -> Fraction:
    return sum((factor_3_region(s, r) for r in REGIONS), Fraction(0))


def factor_3_summary(s: int) -> Fraction:
    check_s(s)
    v = valuation(s, 3)
    u = unit_part(s, 3)
    j = v % 4

    if v % 2 == 0:
        first = Fraction(1, 3 ** (v // 2 + 2))
    elif j == 1:
        first = Fraction(1 - 2 * chi3(u), 3 ** ((v + 3) // 2))
    else:
        first = Fraction(-1, 3 ** ((v + 1) // 2))

    small = {
        0: Fraction(0),
        1: Fraction(2, 3),
        2: Fraction(0),
        3: Fraction(2 * (chi3(u) - 3), 9),
        4: Fraction(-2, 3),
    }
    if v in small:
        second = small[v]
    else:
        floor_term = Fraction(3) ** (1 - 2 * (j // 3)) / 3 ** ((v - j) // 2)
        second = (floor_term - 3) / 4
        if j == 1:
            second += Fraction(8, 3 ** ((v + 1) // 2))
        elif j == 3:
            second += Fraction(2 * chi3(u), 3 ** ((v + 1) // 2))

    if v % 2:
        third = Fraction(0)
    elif u % 3 == 2:
        third = Fraction(2, 3 ** (v // 2 + 2))
    else:
        third = Fraction(-1, 7) / 3 ** (v // 2 + 2)

    return first + second + third
