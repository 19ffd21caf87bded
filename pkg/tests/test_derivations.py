"""Roots, the LND classification, triviality, witnesses."""

import random
from fractions import Fraction

import pytest

from monoalg.derivations import (
    CASE_CONSTRAINED,
    CASE_ESCAPING,
    CASE_ROOT,
    classify_lnd,
    degree_report,
    demazure_roots,
    escape_steps,
    hilbert_complement_ideal,
    inner_outer_split,
    is_trivial,
    lnd_degrees,
    non_liftable_witness,
    root_ray,
    roots_of_ideal,
)
from monoalg.ideal import build_ideal
from monoalg.lattice import dot
from monoalg.semigroup import build_semigroup, first_octant

Q1 = first_octant(1)
Q2 = first_octant(2)
HOOK = build_semigroup(2, [(1, 0), (1, 1), (1, 2)])


def test_demazure_roots_octant():
    groups = dict(demazure_roots(Q2, 3).groups)
    assert set(groups[(0, 1)]) == {(k, -1) for k in range(0, 4)}
    assert set(groups[(1, 0)]) == {(-1, k) for k in range(0, 4)}
    assert demazure_roots(Q1, 5).all_roots() == [(-1,)]


def test_root_disjointness():
    for S in (Q2, HOOK, first_octant(3)):
        rs = demazure_roots(S, 3)
        seen = {}
        for rho, alphas in rs.groups:
            for a in alphas:
                assert a not in seen, (a, rho, seen[a])
                seen[a] = rho
                # the grouping ray is the unique one with value -1
                assert dot(a, rho) == -1


def test_roots_of_ideal_subset():
    for gens in ([(2, 5), (3, 2), (5, 0)], [(2, 0), (0, 2)]):
        ideal = build_ideal(Q2, gens)
        sub = set(roots_of_ideal(Q2, ideal, 5).all_roots())
        assert sub <= set(demazure_roots(Q2, 5).all_roots())


def test_classification_cases():
    I2 = build_ideal(Q2, [(1, 5), (3, 2), (5, 0)])
    assert classify_lnd(Q2, I2, (1, 0), (3, 7)).case == CASE_ESCAPING
    assert classify_lnd(Q2, I2, (0, 1), (1, 0)).case == CASE_CONSTRAINED
    assert not classify_lnd(Q2, I2, (0, 1), (0, 1)).is_lnd
    I1 = build_ideal(Q2, [(2, 5), (3, 2), (5, 0)])
    assert classify_lnd(Q2, I1, (2, -1), (0, 1)).case == CASE_ROOT
    with pytest.raises(ValueError, match="not a liftable homogeneous degree"):
        classify_lnd(Q2, I1, (-1, -1), (1, 0))
    with pytest.raises(ValueError, match="proportional"):
        classify_lnd(Q2, I1, (2, -1), (1, 1))


def test_case_ii_independent_of_p():
    I2 = build_ideal(Q2, [(1, 5), (3, 2), (5, 0)])
    rng = random.Random(3)
    verdicts = {
        classify_lnd(Q2, I2, (1, 0),
                     (Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9)))).is_lnd
        for _ in range(20)
    }
    assert verdicts == {True}


def test_scaling_invariance():
    I2 = build_ideal(Q2, [(1, 5), (3, 2), (5, 0)])
    for alpha, p in [((0, 1), (1, 0)), ((1, 0), (2, 5)), ((0, 1), (0, 1))]:
        base = classify_lnd(Q2, I2, alpha, p)
        for c in (Fraction(2), Fraction(-1, 3), Fraction(7, 2)):
            scaled = tuple(c * x for x in p)
            assert classify_lnd(Q2, I2, alpha, scaled).is_lnd == base.is_lnd


def test_escape_steps_exact():
    ideal = build_ideal(Q1, [(4,)])
    assert escape_steps(Q1, ideal, (0,), (1,)) == 4
    assert escape_steps(Q1, ideal, (3,), (1,)) == 1
    assert escape_steps(Q1, ideal, (0,), (0,)) is None


def test_lnd_degrees_examples():
    reps = lnd_degrees(Q2, build_ideal(Q2, [(2, 0), (1, 1), (0, 2)]))
    assert {r.alpha for r in reps} == {(1, -1), (-1, 1)}
    assert all(r.effective_dim == 1 and r.case == CASE_ROOT for r in reps)

    reps = lnd_degrees(Q1, build_ideal(Q1, [(4,)]))
    assert {r.alpha for r in reps} == {(1,), (2,)}

    reps = {r.alpha: r for r in lnd_degrees(Q2, build_ideal(Q2, [(2, 0), (0, 2)]))}
    assert set(reps) == {(1, 0), (0, 1)}
    assert reps[(1, 0)].effective_basis == ((Fraction(0), Fraction(1)),)
    assert reps[(0, 1)].effective_basis == ((Fraction(1), Fraction(0)),)


def test_lnd_degrees_bound_required():
    not_cofinite = build_ideal(Q2, [(2, 5), (3, 2), (5, 0)])
    with pytest.raises(ValueError, match="bound required"):
        lnd_degrees(Q2, not_cofinite)
    reps = lnd_degrees(Q2, not_cofinite, bound=4)
    assert any(r.case == CASE_ROOT for r in reps)


def test_effective_basis_trivial_kernel_split():
    """Effective basis vectors act nontrivially; kernel vectors do not."""
    for gens in ([(2, 0), (0, 2)], [(2, 0), (1, 1), (0, 2)],
                 [(4, 0), (3, 1), (1, 3), (0, 4)]):
        ideal = build_ideal(Q2, gens)
        for rep in lnd_degrees(Q2, ideal):
            for p in rep.effective_basis:
                assert not is_trivial(Q2, ideal, rep.alpha, p)
            for p in rep.K_basis:
                assert is_trivial(Q2, ideal, rep.alpha, p)


def test_is_trivial_examples():
    assert is_trivial(Q2, build_ideal(Q2, [(2, 0), (1, 1), (0, 2)]), (1, 0), (0, 1))
    assert not is_trivial(Q1, build_ideal(Q1, [(4,)]), (1,), (1,))
    assert not is_trivial(Q2, build_ideal(Q2, [(2, 0), (0, 2)]), (1, 0), (0, 1))


def test_witness_hook():
    w = non_liftable_witness(HOOK)
    assert (w.source, w.target, w.alpha) == ((1, 0), (1, 2), (0, 2))
    assert w.violated_constraints == (((2, -1), -2),)
    assert set(w.ideal.generators) == {(2, k) for k in range(5)}
    # the degree is neither inner nor a root
    assert not HOOK.member(w.alpha)
    assert root_ray(HOOK, w.alpha) is None


def test_witness_non_simplicial():
    cone = build_semigroup(3, [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)])
    w = non_liftable_witness(cone)
    assert len(w.violated_constraints) == 2
    assert all(v < 0 for _, v in w.violated_constraints)
    assert not cone.member(w.alpha)
    assert root_ray(cone, w.alpha) is None


def test_witness_first_octant_error():
    with pytest.raises(ValueError, match="every derivation lifts"):
        non_liftable_witness(Q2)


def test_hilbert_complement_ideal():
    ideal = hilbert_complement_ideal(HOOK)
    comp = {(0, 0)} | set(HOOK.hilbert_basis)
    for m in [(2, 0), (2, 2), (3, 4)]:
        assert ideal.supp_contains(m)
    for m in comp:
        assert not ideal.supp_contains(m)


def test_inner_outer_split():
    inner, outer = inner_outer_split(Q2, [((1, 1), (1, 0)), ((2, -1), (0, 1))])
    assert inner == [((1, 1), (1, 0))]
    assert outer == [((2, -1), (0, 1))]
    with pytest.raises(ValueError):
        inner_outer_split(Q2, [((-1, -1), (1, 0))])


def test_degree_report_cases_match_classify():
    ideal = build_ideal(Q2, [(0, 5), (3, 2), (6, 0)])
    for rep in lnd_degrees(Q2, ideal):
        again = degree_report(Q2, ideal, rep.alpha)
        assert again is not None and again.case == rep.case
        for p in rep.effective_basis:
            assert classify_lnd(Q2, ideal, rep.alpha, p).case == rep.case
