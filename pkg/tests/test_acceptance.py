"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line with its runtime; run with
``pytest tests/test_acceptance.py -v`` or ``python3 tests/test_acceptance.py``.
"""
import random
import time
from fractions import Fraction

import pytest
from sympy import primerange

from rootavg.arith import legendre, unit_part, valuation
from rootavg.average import average, is_parity_biased
from rootavg.factors import (
    factor_2,
    factor_2_summary,
    factor_3,
    factor_3_summary,
    factor_ge5,
    factor_ge5_nu0,
    measure_Sk_closed,
)
from rootavg.factors.region import geometric_tail
from rootavg.padic import measure_Sk_bruteforce
from rootavg.verify import integrate_w_star


def _report(number, title, check, budget=None):
    start = time.perf_counter()
    try:
        detail = check()
        ok = True
    except AssertionError as exc:
        detail, ok = f"{exc}", False
    elapsed = time.perf_counter() - start
    if budget is not None and elapsed > budget:
        ok, detail = False, f"{detail}; took {elapsed:.1f}s > {budget}s"
    line = f"[criterion {number}] {'PASS' if ok else 'FAIL'} {title} ({elapsed:.2f}s) {detail or ''}".rstrip()
    print(line)
    return ok, line


def _run(capsys, *args, **kwargs):
    with capsys.disabled():
        print()
        ok, line = _report(*args, **kwargs)
    assert ok, line


# 1
def parity_bias():
    bad = [s for s in range(-200, 201) if s and is_parity_biased(s) != (s % 8 not in (1, 3, 5))]
    assert not bad, f"mismatch at {bad[:5]}"
    cut = [s for s in range(-200, 201) if s and average(s, 1000).parity_biased != (s % 8 not in (1, 3, 5))]
    assert not cut, f"average() disagrees at {cut[:5]}"
    return "400 values of s"


# 2
def oracle_equivalence():
    cases = exact = 0
    for p in (5, 7, 11, 13, 17, 19, 23):
        svals = [x for x in range(-30, 31) if x]
        svals += [p**e * u for e in (1, 2, 3) for u in (1, -1, 2, -2)]
        for s in svals:
            v = valuation(s, p)
            est = integrate_w_star(s, p, v + 12)
            closed = factor_ge5(p, s)
            assert closed in est, f"p={p} s={s}: {closed} not in [{est.lo}, {est.hi}]"
            if v % 2 or legendre(unit_part(s, p), p) == -1:
                assert est.exact and est.lo == closed, f"p={p} s={s}: expected an exact interval"
                exact += 1
            cases += 1
    return f"{cases} cases, {exact} with zero width"


# 3
def measure_counting():
    n = 0
    for p in (5, 7, 11, 13):
        svals = [x for x in range(-30, 31) if x] + [p * p * u for u in (1, -1, 2, -2)]
        for s in svals:
            for k in range(4):
                assert measure_Sk_bruteforce(p, s, k) == measure_Sk_closed(p, s, k), f"p={p} s={s} k={k}"
                n += 1
    return f"{n} exact comparisons"


# 4
def generic_formula_consistency():
    n = 0
    for p in primerange(5, 98):
        for s in range(-200, 201):
            if s and s % p:
                assert factor_ge5_nu0(p, s) == factor_ge5(p, s), f"p={p} s={s}"
                n += 1
    return f"{n} pairs"


# 5
def branch_sums():
    limit = 3 * 4**6
    for s in range(-limit, limit + 1):
        if s:
            assert factor_3(s) == factor_3_summary(s), f"E(3) at s={s}"
            assert factor_2(s) == factor_2_summary(s), f"E(2) at s={s}"
    return f"0 < |s| <= {limit}"


# 6
def specific_values():
    assert factor_2(7) == Fraction(-1, 2)
    assert factor_2(15) == Fraction(1, 2)
    for s in (1, 3, 5, 9, 11, 13):
        assert factor_2(s) == 0, f"E(2) at s={s}"
    assert factor_ge5(5, 2) == 1 and factor_ge5(7, 2) == 1
    return ""


# 7
def measure_partition():
    K = 20
    for p in (5, 7, 11):
        for s in (1, 2, 3, 6, -1, p * p, 2 * p * p, 3 * p**4):
            h = valuation(s, p) // 2
            whole = Fraction(p - 1, p ** (h + 1))
            partial = sum(measure_Sk_closed(p, s, k) for k in range(K + 1))
            assert 0 <= whole - partial <= Fraction(2, p ** (h + K + 1)), f"p={p} s={s}"
            if legendre(unit_part(s, p), p) == 1:
                series = Fraction(p - 3, p ** (h + 1)) + geometric_tail(Fraction(2 * (p - 1), p ** (h + 2)), Fraction(1, p))
                assert series == whole, f"p={p} s={s}: closed series"
            else:
                assert partial == whole
    return f"K={K}"


# 8
def tail_soundness():
    for p in primerange(5, 10**4 + 1):
        assert Fraction(4 * p * (p * p + 1), (p + 1) * (p**4 + p * p + 1)) < Fraction(5, p * p), f"p={p}"
    rng = random.Random(8)
    sample = rng.sample([x for x in range(-1000, 1001) if x], 20)
    for s in sample:
        coarse, fine = average(s, 10**4), average(s, 10**5)
        assert coarse.lo <= fine.lo and fine.hi <= coarse.hi, f"s={s}"
    return "20 values of s"


# 9
def seven():
    r = average(7, 10**5)
    assert r.average_sign == 1
    assert 0 < r.lo <= r.hi <= Fraction(1, 21)
    return f"[{float(r.lo):.10f}, {float(r.hi):.10f}]"


CRITERIA = [
    (1, "parity bias agrees with the mod 8 rule", parity_bias, 10),
    (2, "closed form E(p) inside the brute-force interval", oracle_equivalence, 300),
    (3, "S_k measure: counting equals closed form", measure_counting, 60),
    (4, "generic-prime formula equals the full formula", generic_formula_consistency, None),
    (5, "E(2), E(3) region sums equal the summary tables", branch_sums, None),
    (6, "specific values of E(2) and E(p)", specific_values, None),
    (7, "S_k measures exhaust {v(t) = v(s)/2}", measure_partition, None),
    (8, "tail bound sound and intervals nest", tail_soundness, 120),
    (9, "s = 7 gives a positive average at most 1/21", seven, None),
]


@pytest.mark.parametrize("number,title,check,budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(capsys, number, title, check, budget):
    _run(capsys, number, title, check, budget=budget)


if __name__ == "__main__":
    import sys

    results = [_report(*c[:3], budget=c[3])[0] for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
