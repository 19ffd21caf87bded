"""Quotient algebras, exponentials, torus and toric symmetries."""

import itertools
import random
from fractions import Fraction

import pytest

from monoalg.derivations import lnd_degrees
from monoalg.ideal import build_ideal
from monoalg.lattice import q_identity, q_mat_mul
from monoalg.quotient import (
    aut_generators,
    build_quotient,
    default_torus_point,
    derivation_matrix,
    exp_matrix,
    exp_parametric,
    is_algebra_automorphism,
    is_nilpotent_matrix,
    mat_pow,
    specialize,
    toric_automorphisms,
    torus_matrix,
    verify_centralizer_torus,
    verify_conjugation,
)
from monoalg.semigroup import build_semigroup, first_octant

Q1 = first_octant(1)
Q2 = first_octant(2)


def quotient(S, gens):
    return build_quotient(S, build_ideal(S, gens))


X4 = quotient(Q1, [(4,)])
SQ = quotient(Q2, [(2, 0), (0, 2)])
TRI = quotient(Q2, [(2, 0), (1, 1), (0, 2)])


def test_basis_and_dim():
    assert X4.basis == ((0,), (1,), (2,), (3,))
    assert SQ.basis == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert TRI.dim == 3 and SQ.index((1, 1)) == 3


def test_mult_table_associative():
    for Q in (X4, SQ, TRI):
        d = Q.dim
        for i, j, k in itertools.product(range(d), repeat=3):
            # indices compose associatively or fall off the basis consistently
            ij = Q.mult[i][j]
            jk = Q.mult[j][k]
            left = Q.mult[ij][k] if ij >= 0 else -1
            right = Q.mult[i][jk] if jk >= 0 else -1
            assert left == right


def test_mult_unit():
    for Q in (X4, SQ, TRI):
        for i in range(Q.dim):
            assert Q.mult[0][i] == i == Q.mult[i][0]


def test_lnd_matrices_nilpotent():
    for Q in (X4, SQ, TRI):
        for rep in lnd_degrees(Q.semigroup, Q.ideal):
            for p in rep.effective_basis:
                D = derivation_matrix(Q, rep.alpha, p)
                assert is_nilpotent_matrix(D)
                assert mat_pow(D, Q.dim) == tuple(
                    tuple(Fraction(0) for _ in row) for row in D)


def test_exp_is_automorphism():
    for Q in (X4, SQ, TRI):
        for rep in lnd_degrees(Q.semigroup, Q.ideal):
            for p in rep.effective_basis:
                M = exp_matrix(Q, rep.alpha, p)
                assert is_algebra_automorphism(Q, M)


def test_exp_group_law():
    """exp(sD)exp(tD) = exp((s+t)D) for scalar multiples of one derivation."""
    rng = random.Random(11)
    for Q in (X4, SQ, TRI):
        for rep in lnd_degrees(Q.semigroup, Q.ideal):
            for p in rep.effective_basis:
                for _ in range(5):
                    a = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                    b = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                    pa = tuple(a * x for x in p)
                    pb = tuple(b * x for x in p)
                    pab = tuple((a + b) * x for x in p)
                    lhs = q_mat_mul(exp_matrix(Q, rep.alpha, pa),
                                    exp_matrix(Q, rep.alpha, pb))
                    assert lhs == exp_matrix(Q, rep.alpha, pab)


def test_exp_parametric_specializes():
    fam = exp_parametric(X4, (1,), (Fraction(1),))
    for s in (Fraction(0), Fraction(1), Fraction(3, 2)):
        assert specialize(fam, s) == exp_matrix(
            X4, (1,), (s,)) if s != 0 else q_identity(4)


def test_exp_rejects_non_nilpotent():
    bad = tuple(tuple(Fraction(1) if i == j else Fraction(0)
                      for j in range(3)) for i in range(3))
    with pytest.raises(ValueError, match="not locally nilpotent"):
        exp_matrix(TRI, (0, 0), (Fraction(1), Fraction(1)))
    assert not is_nilpotent_matrix(bad)


def test_torus_matrix():
    M = torus_matrix(SQ, (2, 3))
    diag = tuple(M[i][i] for i in range(4))
    assert diag == (Fraction(1), Fraction(3), Fraction(2), Fraction(6))
    assert is_algebra_automorphism(SQ, M)
    with pytest.raises(ValueError):
        torus_matrix(SQ, (0, 3))
    with pytest.raises(ValueError):
        torus_matrix(SQ, (2,))


def test_toric_automorphisms_square():
    group = toric_automorphisms(SQ.semigroup, SQ.ideal)
    assert len(group) == 2
    swap = next(g for g in group
                if g.lattice_map != ((1, 0), (0, 1)))
    assert swap.lattice_map == ((0, 1), (1, 0))
    assert swap.basis_permutation == (0, 2, 1, 3)
    assert is_algebra_automorphism(SQ, swap.matrix(4))
    assert q_mat_mul(swap.matrix(4), swap.matrix(4)) == q_identity(4)


def test_toric_automorphisms_trivial():
    only = toric_automorphisms(Q2, build_ideal(Q2, [(2, 0), (0, 3)]))
    assert len(only) == 1
    assert only[0].lattice_map == ((1, 0), (0, 1))


def test_aut_generators_certified():
    gens = aut_generators(SQ.semigroup, SQ.ideal)
    assert gens.first_octant_certified
    assert gens.warning is None
    assert gens.torus_weights == SQ.basis
    assert {f.alpha for f in gens.unipotent_families} == {(1, 0), (0, 1)}


def test_aut_generators_warning():
    hook = build_semigroup(2, [(1, 0), (1, 1), (1, 2)])
    full = build_ideal(hook, [(3, j) for j in range(7)])
    gens = aut_generators(hook, full)
    assert not gens.first_octant_certified
    assert gens.warning is not None


def test_verify_conjugation_random():
    rng = random.Random(5)
    for Q in (X4, SQ, TRI):
        t = default_torus_point(Q.semigroup.ambient_rank)
        for rep in lnd_degrees(Q.semigroup, Q.ideal):
            for p in rep.effective_basis:
                for _ in range(20):
                    s = Fraction(rng.randint(-6, 6), rng.randint(1, 5))
                    scaled = tuple(s * x for x in p)
                    assert verify_conjugation(Q, t, rep.alpha, scaled)


def test_verify_centralizer():
    for Q in (X4, SQ, TRI):
        assert verify_centralizer_torus(Q)


def test_fullify_notice():
    hook = build_semigroup(2, [(1, 0), (1, 1), (1, 2)])
    Q = build_quotient(hook, build_ideal(hook, [(2, 0), (1, 2)]))
    assert Q.fullified
    assert Q.notice == "ideal was not full; replaced by its fullification"
    full = build_quotient(Q1, build_ideal(Q1, [(4,)]))
    assert not full.fullified and full.notice is None


def test_infinite_dimensional_error():
    with pytest.raises(ValueError, match="quotient is infinite dimensional"):
        build_quotient(Q2, build_ideal(Q2, [(2, 5), (3, 2), (5, 0)]))


def test_swap_conjugation_identity():
    """The variable swap of the 3-dim square-free quotient is a conjugate:
    with phi: y -> x - y and psi: x -> x - y, swap = psi^-1 . phi . psi."""
    from monoalg.lattice import q_inverse
    phi = q_mat_mul(torus_matrix(TRI, (1, -1)),
                    exp_matrix(TRI, (1, -1), (Fraction(0), Fraction(1))))
    psi = exp_matrix(TRI, (-1, 1), (Fraction(-1), Fraction(0)))
    swap = next(g for g in toric_automorphisms(TRI.semigroup, TRI.ideal)
                if g.lattice_map != ((1, 0), (0, 1))).matrix(3)
    assert q_mat_mul(q_mat_mul(q_inverse(psi), phi), psi) == swap
