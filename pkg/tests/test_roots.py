from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hbsiegel.roots import (Interval, count_roots, eval_interval, evaluate, is_squarefree,
                            isolate_real_roots, refine_root, sturm_chain)


def from_roots(rs):
    p = [Fraction(1)]
    for r in rs:
        q = [Fraction(0)] * (len(p) + 1)
        for i, c in enumerate(p):
            q[i + 1] += c
            q[i] -= r * c
        p = q
    return p


def bisect(p, lo, hi, width):
    """Plain bisection on a bracket; independent of the Sturm machinery."""
    lo, hi = Fraction(lo), Fraction(hi)
    s = evaluate(p, lo) > 0
    while hi - lo > width:
        m = (lo + hi) / 2
        if (evaluate(p, m) > 0) == s:
            lo = m
        else:
            hi = m
    return lo, hi


distinct_roots = st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3),
                          min_size=1, max_size=5, unique=True)


@settings(max_examples=80, deadline=None)
@given(distinct_roots)
def test_sturm_count_matches_known_roots(rs):
    p = from_roots(rs)
    chain = sturm_chain(p)
    assert count_roots(chain, Fraction(-10), Fraction(10)) == len(rs)
    assert count_roots(chain, Fraction(0), Fraction(10)) == sum(1 for r in rs if r > 0)


@settings(max_examples=80, deadline=None)
@given(distinct_roots)
def test_isolation_finds_every_root(rs):
    p = from_roots(rs)
    ivs = isolate_real_roots(p)
    assert len(ivs) == len(rs)
    for iv, r in zip(ivs, sorted(rs)):
        assert iv.contains(r)
    for a, b in zip(ivs, ivs[1:]):
        assert a.hi <= b.lo


def test_sqrt2_against_bisection():
    p = [Fraction(-2), Fraction(0), Fraction(1)]
    w = Fraction(1, 2 ** 20)
    ivs = [refine_root(p, iv, w) for iv in isolate_real_roots(p)]
    lo, hi = bisect(p, 1, 2, w)
    pos = ivs[1]
    assert pos.width <= w
    assert not (pos.hi < lo or hi < pos.lo)
    assert -ivs[0].hi >= lo - w and -ivs[0].lo <= hi + w


def test_no_real_roots():
    p = [Fraction(1), Fraction(0), Fraction(1)]
    assert isolate_real_roots(p) == []
    assert count_roots(sturm_chain(p), Fraction(-5), Fraction(5)) == 0


def test_squarefree():
    assert is_squarefree([Fraction(-2), 0, 1])
    assert not is_squarefree([Fraction(1), -2, 1])


@settings(max_examples=100, deadline=None)
@given(st.fractions(-3, 3, max_denominator=8), st.fractions(0, 1, max_denominator=8),
       st.fractions(0, 1, max_denominator=8),
       st.lists(st.fractions(-3, 3, max_denominator=4), min_size=1, max_size=4))
def test_interval_polynomial_enclosure(lo, w, t, coeffs):
    iv = Interval(lo, lo + w)
    x = lo + t * w
    assert eval_interval(coeffs, iv).contains(evaluate(coeffs, x))


def test_interval_rejects_empty():
    with pytest.raises(ValueError):
        Interval(1, 0)
