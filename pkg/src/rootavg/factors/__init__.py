"""Closed-form local factors E(p) for every prime p."""
from __future__ import annotations

from fractions import Fraction

from ..arith import is_prime
from ..errors import InvalidArgument
from .ge5 import factor_ge5, factor_ge5_nu0, factor_ge5_region, measure_Sk_closed
from .region import REGIONS, Region
from .three import factor_3, factor_3_region, factor_3_summary
from .two import factor_2, factor_2_region, factor_2_summary


def local_factor_region(p: int, s: int, region: Region) -> Fraction:
    if p == 2:
        return factor_2_region(s, region)
    if p == 3:
        return factor_3_region(s, region)
    return factor_ge5_region(p, s, region)


def local_factor(p: int, s: int) -> Fraction:
    """E(p), dispatched on p."""
    if not is_prime(p):
        raise InvalidArgument(f"{p} is not a prime")
    if p == 2:
        return factor_2(s)
    if p == 3:
        return factor_3(s)
    return factor_ge5(p, s)


__all__ = [
    "REGIONS",
    "Region",
    "factor_2",
    "factor_2_region",
    "factor_2_summary",
    "factor_3",
    "factor_3_region",
    "factor_3_summary",
    "factor_ge5",
    "factor_ge5_nu0",
    "factor_ge5_region",
    "local_factor",
    "local_factor_region",
    "measure_Sk_closed",
]
