"""The family F_s(t): y^2 = x^3 + 3t x^2 + 3s x + s t.

Long Weierstrass model with a1 = a3 = 0, a2 = 3t, a4 = 3s, a6 = st.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidArgument


def check_s(s: int) -> int:
    if not isinstance(s, int) or isinstance(s, bool):
        raise InvalidArgument(f"s must be an integer, got {s!r}")
    if s == 0:
        raise InvalidArgument("s must be nonzero")
    return s


@dataclass(frozen=True)
class CurveInvariants:
    c4: int
    c6: int
    disc: int
    j_invariant: Fraction | None  # None when disc == 0

    @property
    def singular(self) -> bool:
        return self.disc == 0


def invariants(s: int, t: int) -> CurveInvariants:
    check_s(s)
    q = t * t - s
    c4 = 144 * q
    c6 = -1728 * t * q
    disc = -1728 * s * q * q
    j = Fraction(-1728 * q, s) if disc else None
    return CurveInvariants(c4, c6, disc, j)


def is_smooth(s: int, t: int) -> bool:
    check_s(s)
    return t * t != s


def from_washington(a: int, t: int) -> tuple[int, int]:
    """(s, t') with W_a(t) isomorphic to F_s(t')."""
    if a == 0:
        raise InvalidArgument("a must be nonzero")
    return -972 * a * a, 12 * t + 18 * a


def from_v_family(a: int, t: int) -> tuple[int, int]:
    """(s, t') with V_a(t) isomorphic to F_s(t')."""
    if a == 0:
        raise InvalidArgument("a must be nonzero")
    return 4 * a * a, 4 * t - 2 * a


def framework_constants(s: int) -> tuple[list[int], list[int]]:
    """Coefficient lists (constant term first) of M_F and B.

    F_s has no multiplicative place besides -deg, so M_F = 1; the
    quite-bad polynomial is B(x) = x^2 - s.
    """
    check_s(s)
    return [1], [-s, 0, 1]
