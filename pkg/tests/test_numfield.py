import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hbsiegel.errors import (DivisionByZero, InputError, NotAnOrder, NotTotallyReal,
                             RepeatedRoots, SingularBasis)
from hbsiegel.linalg import RatMatrix
from hbsiegel.numfield import NumberField, power_basis, real_embeddings
from hbsiegel.sampling import random_element

from conftest import TEST_FIELDS, make_field


# --- oracles -----------------------------------------------------------------------

def companion(minpoly):
    g = len(minpoly) - 1
    rows = [[0] * g for _ in range(g)]
    for i in range(1, g):
        rows[i][i - 1] = 1
    for i in range(g):
        rows[i][g - 1] = -minpoly[i]
    return RatMatrix(rows)


def oracle_trace(x):
    """Trace of sum_i x_i C^i with C the companion matrix, built here from scratch."""
    c = companion(x.field.minpoly)
    g = c.nrows
    acc, p = RatMatrix.zeros(g), RatMatrix.identity(g)
    for coef in x.coords:
        acc = acc + p.scale(coef)
        p = p @ c
    return acc.trace(), acc.det()


def float_embeddings(x):
    rts = np.sort(np.roots([float(c) for c in reversed(x.field.minpoly)]).real)
    return [sum(float(c) * r ** i for i, c in enumerate(x.coords)) for r in rts]


# --- construction --------------------------------------------------------------------

@pytest.mark.parametrize("minpoly,gram", [
    ([-1, -1, 1], [[2, 1], [1, 3]]),
    ([0, 1], [[1]]),
    ([-2, 0, 1], [[2, 0], [0, 4]]),
])
def test_gram_examples(minpoly, gram):
    assert make_field(minpoly).gram == RatMatrix(gram)


def test_gram_matches_trace_oracle(field):
    for a in field.basis:
        for b in field.basis:
            assert (a * b).trace() == oracle_trace(a * b)[0]


@pytest.mark.parametrize("minpoly,basis,exc", [
    ([1, -2, 1], power_basis(2), RepeatedRoots),
    ([1, 0, 1], power_basis(2), NotTotallyReal),
    ([-1, -1, 1], [[1, 0], [0, Fraction(1, 2)]], NotAnOrder),
    ([-1, -1, 1], [[2, 0], [0, 1]], NotAnOrder),
    ([-1, -1, 1], [[1, 0], [2, 0]], SingularBasis),
    ([-1, -1, 2], power_basis(2), InputError),
    ([-1, -1, 1], power_basis(3), InputError),
])
def test_invalid_fields(minpoly, basis, exc):
    with pytest.raises(exc):
        NumberField(minpoly, basis)


def test_nonstandard_order_basis_accepted():
    # Z[2 phi] is an order of index 2 in Z[phi]
    nf = NumberField([-1, -1, 1], [[1, 0], [0, 2]])
    assert nf.gram == RatMatrix([[2, 2], [2, 12]])
    assert nf.discriminant == 20


# --- arithmetic ------------------------------------------------------------------------

def test_golden_relations(golden):
    phi = golden.generator
    assert phi * phi == phi + 1
    assert 1 / phi == phi - 1
    assert phi.trace() == 1
    assert golden.one.trace() == 2


def test_sqrt2_relations(sqrt2):
    r = sqrt2.generator
    assert r * r == 2
    assert r.norm() == -2


def test_division_by_zero(golden):
    with pytest.raises(DivisionByZero):
        golden.one / golden.zero
    with pytest.raises(DivisionByZero):
        golden.one / 0


def test_trace_of_one_is_degree(any_field):
    assert any_field.one.trace() == any_field.degree


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2 ** 32), st.sampled_from(sorted(TEST_FIELDS)))
def test_trace_and_norm_match_companion_oracle(seed, name):
    nf = make_field(TEST_FIELDS[name])
    x = random_element(nf, random.Random(seed))
    tr, nm = oracle_trace(x)
    assert x.trace() == tr
    assert x.norm() == nm


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2 ** 32), st.sampled_from(sorted(TEST_FIELDS)))
def test_field_axioms(seed, name):
    nf = make_field(TEST_FIELDS[name])
    rng = random.Random(seed)
    x, y, z = (random_element(nf, rng) for _ in range(3))
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    if not y.is_zero():
        assert (x / y) * y == x
    assert (x * y).trace() == (y * x).trace()


# --- duality -------------------------------------------------------------------------------

def test_dual_basis_examples(golden, sqrt2, rationals):
    phi = golden.generator
    assert golden.dual_basis == ((3 - phi) / 5, (2 * phi - 1) / 5)
    assert rationals.dual_basis == (rationals.one,)
    r = sqrt2.generator
    assert sqrt2.dual_basis == (sqrt2.rational(Fraction(1, 2)), r / 4)


def test_dual_basis_is_trace_dual(any_field):
    for j, es in enumerate(any_field.dual_basis):
        for k, e in enumerate(any_field.basis):
            assert (es * e).trace() == (1 if j == k else 0)


def test_dual_of_dual_recovers_order(any_field):
    nf = any_field
    es = nf.dual_basis
    gram_star = RatMatrix([[(a * b).trace() for b in es] for a in es])
    ginv = gram_star.inverse()
    ess = [sum((e * ginv[j, k] for k, e in enumerate(es)), nf.zero) for j in range(nf.degree)]
    change = RatMatrix([nf.coords_in_basis(x) for x in ess])
    assert change.is_integral()
    assert abs(change.det()) == 1


def test_coords_examples(golden):
    phi = golden.generator
    assert golden.coords_in_dual(golden.dual_basis[0]) == (1, 0)
    assert golden.coords_in_basis(golden.basis[1]) == (0, 1)
    assert golden.coords_in_basis(phi * phi) == (1, 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2 ** 32), st.sampled_from(sorted(TEST_FIELDS)))
def test_coordinate_roundtrips(seed, name):
    nf = make_field(TEST_FIELDS[name])
    x = random_element(nf, random.Random(seed))
    assert nf.from_dual_coords(nf.coords_in_dual(x)) == x
    assert nf.from_basis_coords(nf.coords_in_basis(x)) == x


def test_different_basis(field):
    # for these maximal orders, [O : D] = |disc|
    change = RatMatrix([field.coords_in_basis(x) for x in field.different_basis])
    assert change.is_integral()
    assert abs(change.det()) == abs(field.discriminant)
    for x in field.different_basis:
        assert field.in_different(x)


def test_sqrt5_generates_golden_different(golden):
    s5 = 2 * golden.generator - 1
    assert golden.in_different(s5)
    assert not golden.in_different(golden.one)
    # D = sqrt5 * O
    assert all(golden.in_order(x / s5) for x in golden.different_basis)


def test_ideal_chain(field):
    # D in O in D^-1
    for x in field.different_basis:
        assert field.in_order(x)
    for x in field.basis:
        assert field.in_inverse_different(x)


# --- embeddings ----------------------------------------------------------------------------

@pytest.mark.parametrize("name,p", [("golden", 10), ("sqrt2", 20), ("cubic49", 30), ("cubic81", 30)])
def test_real_embeddings_widths_and_roots(name, p):
    nf = make_field(TEST_FIELDS[name])
    emb = real_embeddings(nf, p)
    rts = float_embeddings(nf.generator)
    assert len(emb.intervals) == nf.degree
    for iv, r in zip(emb.intervals, rts):
        assert iv.width <= Fraction(1, 2 ** p)
        assert float(iv.lo) - 1e-12 <= r <= float(iv.hi) + 1e-12
    for a, b in zip(emb.intervals, emb.intervals[1:]):
        assert a.hi < b.lo


def test_golden_embedding_values(golden):
    emb = real_embeddings(golden, 10)
    lo, hi = emb.intervals
    assert abs(float(lo.mid) + 0.6180339887) < 2 ** -10
    assert abs(float(hi.mid) - 1.6180339887) < 2 ** -10


def test_rational_field_embedding_exact(rationals):
    (iv,) = real_embeddings(rationals, 5).intervals
    assert iv.lo == iv.hi == 0


def test_split_algebra_roots_enclosed():
    nf = NumberField([-2, -1, 1], power_basis(2))  # roots -1, 2; irreducibility is not checked
    ivs = real_embeddings(nf, 8).intervals
    assert ivs[0].contains(-1) and ivs[1].contains(2)
    assert all(iv.width <= Fraction(1, 256) for iv in ivs)


def test_low_precision_intervals_are_disjoint(field):
    emb = real_embeddings(field, 1)
    for a, b in zip(emb.intervals, emb.intervals[1:]):
        assert a.disjoint(b)


def test_gram_enclosed_by_embeddings(any_field):
    emb = real_embeddings(any_field, 40)
    vals = [emb.embed(e) for e in any_field.basis]
    for j, vj in enumerate(vals):
        for k, vk in enumerate(vals):
            s = sum((a * b for a, b in zip(vj, vk)), start=vj[0] * 0)
            assert s.contains(any_field.gram[j, k])


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32), st.sampled_from(sorted(TEST_FIELDS)))
def test_trace_form_positive(seed, name):
    nf = make_field(TEST_FIELDS[name])
    x = random_element(nf, random.Random(seed))
    if x.is_zero():
        return
    emb = real_embeddings(nf, 64)
    enclosure = sum((v * v for v in emb.embed(x)), start=emb.embed(nf.zero)[0])
    assert enclosure.contains((x * x).trace())
    assert (x * x).trace() > 0
