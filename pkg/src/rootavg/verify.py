"""Cross-check closed-form E(p) against brute-force integration of w_p^*."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import valuation
from .errors import UnsupportedPrime
from .factors import factor_ge5
from .localroot import w_p_star
from .padic import IntegralEstimate, ResidueClass, integrate_adaptive


def w_star_evaluator(s: int, p: int):
    """Class evaluator for w_p^*(t) on r + p^m Z_p.

    w_p^* is a function of v(t), t_p mod p and v(t^2 - s).  On a class not
    containing 0 with v(r) = e < m these are constant as soon as
    v(r^2 - s) < m + e, because t^2 - r^2 = (t - r)(t + r) has valuation at
    least m + e.  The class p^m Z_p is constant once 2m > v(s): every nonzero
    t in it falls in the region where w_p^* depends on s alone.
    """
    vs = valuation(s, p)

    def evaluate(cls: ResidueClass) -> Fraction | None:
        r, m = cls.r, cls.m
        if r == 0:
            if 2 * m > vs:
                return Fraction(w_p_star(s, p**m, p))
            return None
        e = valuation(r, p)
        if valuation(r * r - s, p) >= m + e:
            return None
        return Fraction(w_p_star(s, r, p))

    return evaluate


def default_depth(s: int, p: int) -> int:
    return valuation(s, p) + 12


def integrate_w_star(s: int, p: int, depth: int | None = None, initial_depth: int = 1) -> IntegralEstimate:
    if p < 5:
        raise UnsupportedPrime("pointwise w_p unavailable for p<5")
    if depth is None:
        depth = default_depth(s, p)
    return integrate_adaptive(w_star_evaluator(s, p), p, initial_depth, max(depth, initial_depth))


@dataclass(frozen=True)
class Verification:
    s: int
    p: int
    depth: int
    estimate: IntegralEstimate
    closed_form: Fraction

    @property
    def verdict(self) -> str:
        if self.estimate.exact and self.estimate.lo == self.closed_form:
            return "EXACT"
        if self.closed_form in self.estimate:
            return "CONTAINED"
        return "FAIL"


def verify_factor(s: int, p: int, depth: int | None = None) -> Verification:
    if depth is None:
        depth = default_depth(s, p)
    estimate = integrate_w_star(s, p, depth)
    return Verification(s, p, depth, estimate, factor_ge5(p, s))
