from __future__ import annotations

import enum
from fractions import Fraction


class Region(enum.Enum):
    """Pieces of Z_p split by comparing 2*v_p(t) with v_p(s)."""

    LESS_THAN = "lt"  # 2 v(t) < v(s)
    GREATER_THAN = "gt"  # v(s) < 2 v(t)
    EQUAL = "eq"  # 2 v(t) == v(s)


REGIONS = (Region.LESS_THAN, Region.GREATER_THAN, Region.EQUAL)


def geometric_tail(first: Fraction, ratio: Fraction) -> Fraction:
    """first + first*ratio + first*ratio^2 + ... for |ratio| < 1."""
    if abs(ratio) >= 1:
        raise ValueError("divergent geometric series")
    return first / (1 - ratio)
