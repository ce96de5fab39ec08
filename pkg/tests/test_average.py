import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rootavg.average import (
    average,
    exceptional_primes,
    generic_factors,
    is_parity_biased,
    tail_lower_bound,
)
from rootavg.errors import InvalidArgument
from rootavg.factors import factor_ge5


def test_exceptional_primes():
    assert exceptional_primes(1) == [2, 3]
    assert exceptional_primes(10) == [2, 3, 5]
    assert exceptional_primes(-49) == [2, 3, 7]


def test_tail_lower_bound():
    assert tail_lower_bound(10**5) == 1 - Fraction(1, 20000)
    assert tail_lower_bound(5) == 0
    assert tail_lower_bound(10**3) == Fraction(199, 200)
    with pytest.raises(InvalidArgument):
        tail_lower_bound(4)


def test_average_examples():
    r = average(1, 1000)
    assert (r.lo, r.hi) == (0, 0) and not r.parity_biased and r.average_sign == 0
    r = average(7, 1000)
    assert r.parity_biased and r.average_sign == 1 and r.hi <= Fraction(1, 21)
    assert r.factor(2) == Fraction(-1, 2) and r.factor(3) == Fraction(2, 21)
    r = average(-1, 1000)
    assert r.parity_biased and r.factor(2) == Fraction(1, 2) and r.average_sign == -1
    with pytest.raises(InvalidArgument):
        average(0, 1000)
    with pytest.raises(InvalidArgument):
        average(7, 3)


def test_parity_examples():
    assert not is_parity_biased(1)
    assert is_parity_biased(7)
    assert is_parity_biased(2)


def test_generic_factors_are_the_nontrivial_ones():
    s, P = 7, 500
    listed = dict(generic_factors(s, P))
    for p in range(5, P + 1):
        if p in listed:
            assert listed[p] == factor_ge5(p, s) != 1
        elif s % p and all(p % q for q in range(2, p)):
            assert factor_ge5(p, s) == 1


def test_even_s_never_zero():
    for s in range(-100, 101, 2):
        if s:
            r = average(s, 500)
            assert r.lo < r.hi and r.average_sign != 0


def test_monotone_refinement():
    rng = random.Random(20240611)
    for s in rng.sample([x for x in range(-1000, 1001) if x], 20):
        a = average(s, 1000)
        b = average(s, 5000)
        assert a.lo <= b.lo and b.hi <= a.hi


@settings(max_examples=30, deadline=None)
@given(st.integers(-10**4, 10**4).filter(bool))
def test_interval_within_unit(s):
    r = average(s, 2000)
    assert -1 <= r.lo <= r.hi <= 1
    assert r.parity_biased == is_parity_biased(s) == (s % 8 not in (1, 3, 5))
    if r.parity_biased:
        assert r.lo * r.hi > 0
