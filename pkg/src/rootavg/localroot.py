"""Local root numbers of F_s(t) at p >= 5 and their modified versions.

w_2 and w_3 are not evaluated pointwise: their tables live outside this
package, so asking for them raises ``UnsupportedPrime``.
"""
from __future__ import annotations

from fractions import Fraction

from .arith import is_prime, legendre, unit_part, valuation
from .errors import InvalidArgument, SingularSpecialization, UnsupportedPrime
from .family import check_s


def _check(s: int, t: int, p: int) -> None:
    check_s(s)
    if not is_prime(p):
        raise InvalidArgument(f"{p} is not a prime")
    if p < 5:
        raise UnsupportedPrime("pointwise w_p unavailable for p<5")
    if t * t == s:
        raise SingularSpecialization(f"F_{s}({t}) is singular")


def w_p(s: int, t: int, p: int) -> int:
    _check(s, t, p)
    vs = valuation(s, p)
    vt = valuation(t, p)  # INFINITE at t = 0 lands in the second branch
    if 2 * vt < vs:
        if vt % 2 == 0:
            return -legendre(3 * unit_part(t, p), p)
        return legendre(-1, p)
    if vs < 2 * vt:
        if vs % 2 == 0:
            return legendre(-1, p) ** (vs // 2)
        return legendre(-2, p)
    n = vt + valuation(t * t - s, p)
    if n % 2 == 1:
        return legendre(-1, p)
    if n % 6 in (2, 4):
        return legendre(-3, p)
    if n % 6 == 0:
        return 1
    raise AssertionError(f"unreachable residue {n} mod 6")


def w_p_star(s: int, t: int, p: int) -> int:
    w = w_p(s, t, p)
    return w * legendre(-1, p) ** valuation(t * t - s, p)


def w_infinity_star(s: int, t: int) -> int:
    check_s(s)
    q = t * t - s
    if q == 0:
        raise SingularSpecialization(f"F_{s}({t}) is singular")
    return 1 if q > 0 else -1


def archimedean_limit_mean(s: int) -> Fraction:
    """(c_- + c_+)/2 for sgn(x^2 - s); both limits are +1."""
    check_s(s)
    c_minus = c_plus = 1
    return Fraction(c_minus + c_plus, 2)
