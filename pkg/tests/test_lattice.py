"""Integer and rational linear algebra invariants."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from monoalg.lattice import (
    det,
    hermite_normal_form,
    elementary_divisors,
    in_rowspace,
    intersect_rowspaces,
    make_matrix,
    mat_mul,
    nullspace,
    pairing_matrix,
    primitive,
    q_inverse,
    q_mat_mul,
    q_matrix,
    rref,
    smith_normal_form,
    sublattice_index,
    verify_det_index,
)

small_int = st.integers(min_value=-20, max_value=20)


def int_matrix(draw, max_n=4):
    n = draw(st.integers(min_value=1, max_value=max_n))
    m = draw(st.integers(min_value=1, max_value=max_n))
    return tuple(
        tuple(draw(small_int) for _ in range(m)) for _ in range(n)
    )


@st.composite
def matrices(draw):
    return int_matrix(draw)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_hnf_transform(a):
    h, u = hermite_normal_form(a)
    assert mat_mul(u, a) == h
    if len(u) == len(u[0]):
        assert abs(det(u)) == 1
    # pivots strictly to the right as we go down
    last = -1
    for row in h:
        nz = [j for j, x in enumerate(row) if x != 0]
        if nz:
            assert nz[0] > last
            assert row[nz[0]] > 0
            last = nz[0]


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_snf_transform(a):
    d, u, v = smith_normal_form(a)
    assert mat_mul(mat_mul(u, a), v) == d
    assert abs(det(u)) == 1 and abs(det(v)) == 1
    divs = [d[i][i] for i in range(min(len(d), len(d[0])))]
    for i in range(len(d)):
        for j in range(len(d[0])):
            if i != j:
                assert d[i][j] == 0
    nonzero = [x for x in divs if x != 0]
    assert all(x > 0 for x in nonzero)
    for a_, b_ in zip(nonzero, nonzero[1:]):
        assert b_ % a_ == 0


def test_snf_known():
    d, _, _ = smith_normal_form(((2, 0), (0, 3)))
    assert (d[0][0], d[1][1]) == (1, 6)
    assert elementary_divisors(((2, 4), (6, 8))) == [2, 4]


def test_sublattice_index():
    assert sublattice_index([(2, 0), (0, 1)]) == 2
    assert sublattice_index([(1, 0)]) == "infinite"
    with pytest.raises(ValueError):
        sublattice_index([])


def test_primitive():
    assert primitive((2, 4, -6)) == (1, 2, -3)
    assert primitive((0, 0)) == (0, 0)


def test_pairing_matrix():
    m = pairing_matrix([(1, 0), (1, 2)], [(0, 1), (2, -1)])
    # entry (i, j) pairs the j-th vector with the i-th functional
    assert m == ((0, 2), (2, 0))


def test_det_index_identity_samples():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 4)
        while True:
            a = tuple(
                tuple(rng.randint(-9, 9) for _ in range(n)) for _ in range(n)
            )
            if det(a) != 0:
                break
        b = tuple(
            tuple(rng.randint(-9, 9) for _ in range(n)) for _ in range(n)
        )
        if det(b) != 0:
            assert verify_det_index(a, b)
        assert sublattice_index(list(a)) == abs(det(a))


def test_rational_helpers():
    a = q_matrix(((1, 2), (3, 4)))
    inv = q_inverse(a)
    assert q_mat_mul(a, inv) == q_matrix(((1, 0), (0, 1)))
    with pytest.raises(ValueError):
        q_inverse(q_matrix(((1, 2), (2, 4))))
    ker = nullspace([[1, 1, 0], [0, 0, 1]], 3)
    assert len(ker) == 1 and ker[0] == (Fraction(1), Fraction(-1), Fraction(0))
    both = intersect_rowspaces([[1, 0], [0, 1]], [[1, 1]], 2)
    assert len(both) == 1 and in_rowspace(both[0], [[1, 1]])


def test_rref_drops_zero_rows():
    assert rref([[0, 0], [2, 4]]) == [[Fraction(1), Fraction(2)]]
