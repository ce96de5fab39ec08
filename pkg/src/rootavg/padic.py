"""Brute-force integration over Z_p with exact rational intervals.

Two integrators live here:

* :func:`integrate_adaptive` walks residue classes ``r + p^m Z_p``
  breadth-first.  The evaluator either returns the (constant) value of the
  integrand on a class, or ``None`` to ask for refinement.  Whatever is still
  unresolved at ``max_depth`` contributes ``+-bound * measure`` to the
  interval, never a guessed value.
* :func:`integrate_uniform` sums a function determined by the valuation and
  the unit part modulo ``p^eta``, level by level, with an explicit tail.

:func:`measure_Sk_bruteforce` is a plain counting oracle for the measures of
``S_k = {t : v(t) = v(s)/2, v(t^2 - s) = v(s) + k}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .arith import is_prime, valuation
from .errors import ContractViolation, InvalidArgument, ResourceLimit
from .family import check_s

MAX_INITIAL_CLASSES = 10**8


@dataclass(frozen=True)
class ResidueClass:
    p: int
    m: int
    r: int

    @property
    def measure(self) -> Fraction:
        return Fraction(1, self.p**self.m)

    def children(self) -> list["ResidueClass"]:
        step = self.p**self.m
        return [ResidueClass(self.p, self.m + 1, self.r + a * step) for a in range(self.p)]

    def __contains__(self, t: int) -> bool:
        return (t - self.r) % self.p**self.m == 0


Evaluator = Callable[[ResidueClass], Optional[Fraction]]


@dataclass(frozen=True)
class IntegralEstimate:
    lo: Fraction
    hi: Fraction
    resolved_mass: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi


@dataclass(frozen=True)
class UniformFunction:
    """f(x) = func(v_p(x), x_p mod p^eta)."""

    eta: int
    func: Callable[[int, int], Fraction | int]


def integrate_adaptive(
    evaluator: Evaluator,
    p: int,
    initial_depth: int = 1,
    max_depth: int = 12,
    *,
    bound: Fraction | int = 1,
    check: bool = True,
) -> IntegralEstimate:
    """Integrate over Z_p by refining classes until the evaluator commits.

    With ``check`` set, every determined class is re-evaluated on its ``p``
    children; a child that commits to a different value raises
    ``ContractViolation``.
    """
    if not is_prime(p):
        raise InvalidArgument(f"{p} is not a prime")
    if initial_depth < 1 or max_depth < initial_depth:
        raise InvalidArgument("need 1 <= initial_depth <= max_depth")
    if p**initial_depth > MAX_INITIAL_CLASSES:
        raise ResourceLimit(f"{p}^{initial_depth} classes exceeds the enumeration cap")

    total = Fraction(0)
    unresolved = Fraction(0)
    frontier = [ResidueClass(p, initial_depth, r) for r in range(p**initial_depth)]
    depth = initial_depth
    while frontier:
        level_sum = Fraction(0)
        pending = []
        for cls in frontier:
            value = evaluator(cls)
            if value is None:
                pending.append(cls)
                continue
            if check:
                for child in cls.children():
                    cv = evaluator(child)
                    if cv is not None and cv != value:
                        raise ContractViolation(
                            f"class {cls.r} mod {p}^{cls.m} gave {value}, subclass {child.r} gave {cv}"
                        )
            level_sum += value
        total += level_sum / p**depth
        if depth == max_depth:
            unresolved = Fraction(len(pending), p**depth)
            break
        frontier = [child for cls in pending for child in cls.children()]
        depth += 1
    slack = bound * unresolved
    return IntegralEstimate(total - slack, total + slack, 1 - unresolved)


def integrate_uniform(f: UniformFunction, p: int, tail_depth: int) -> IntegralEstimate:
    """Sum the levels v_p(t) = 0..tail_depth exactly; the rest is a +-p^-(E+1) tail."""
    if not is_prime(p):
        raise InvalidArgument(f"{p} is not a prime")
    q = p**f.eta
    units = [d for d in range(1, q) if d % p]
    total = Fraction(0)
    for e in range(tail_depth + 1):
        level = sum(Fraction(f.func(e, d)) for d in units)
        total += level / p ** (e + f.eta)
    tail = Fraction(1, p ** (tail_depth + 1))
    lo = max(total - tail, Fraction(-1))
    hi = min(total + tail, Fraction(1))
    return IntegralEstimate(lo, hi, 1 - tail)


def measure_Sk_bruteforce(p: int, s: int, k: int) -> Fraction:
    """Count residues mod p^(v/2+k+2) lying in S_k.

    At that modulus membership is constant on each class: moving t by
    p^(v/2+k+2) moves t^2 - s by something of valuation >= v+k+2.
    """
    check_s(s)
    if p < 5 or not is_prime(p):
        raise InvalidArgument("measure_Sk_bruteforce needs a prime p >= 5")
    if k < 0:
        raise InvalidArgument("k must be nonnegative")
    v = valuation(s, p)
    if v % 2:
        return Fraction(0)
    half = v // 2
    exponent = half + k + 2
    # only multiples of p^half can have v(t) = half; enumerate those
    cofactors = p ** (exponent - half)
    target = v + k
    if p**exponent < 2**31 and abs(s) < 2**61:  # r*r - s fits in int64
        d = np.arange(cofactors, dtype=np.int64)
        d = d[d % p != 0]
        r = d * p**half
        q = r * r - s
        hits = int(np.count_nonzero((q % p**target == 0) & (q % p ** (target + 1) != 0)))
    else:
        hits = 0
        for d in range(cofactors):
            if d % p == 0:
                continue
            r = d * p**half
            if valuation(r * r - s, p) == target:
                hits += 1
    return Fraction(hits, p**exponent)
