"""Generators of the automorphism group of a zero-dimensional quotient.

The group is generated by the torus, the one-parameter unipotent subgroups
coming from locally nilpotent derivations, and the finite group of toric
symmetries.  All matrices are exact rationals in the monomial basis.
"""

from fractions import Fraction

from monoalg import (
    aut_generators,
    build_ideal,
    build_quotient,
    exp_matrix,
    first_octant,
    toric_automorphisms,
    torus_matrix,
    verify_centralizer_torus,
    verify_conjugation,
)

Q2 = first_octant(2)
ideal = build_ideal(Q2, [(2, 0), (0, 2)])
Q = build_quotient(Q2, ideal)
print("monomial basis:", Q.basis)

T = torus_matrix(Q, (2, 3))
print("torus element t=(2,3) acts by", [str(T[i][i]) for i in range(Q.dim)])

E = exp_matrix(Q, (1, 0), (Fraction(0), Fraction(1)))
print("exp of the degree (1,0) derivation (y -> y + xy):")
for row in E:
    print("   ", [str(c) for c in row])

print()
group = toric_automorphisms(Q2, ideal)
print("toric symmetries:", len(group))
for g in group:
    print("  lattice map", g.lattice_map, " permutes basis by",
          g.basis_permutation)

gens = aut_generators(Q2, ideal)
print()
print("generator summary:")
print("  torus weights:        ", gens.torus_weights)
print("  unipotent degrees:    ", [f.alpha for f in gens.unipotent_families])
print("  opposite root pairs:  ", gens.opposite_root_degrees)
print("  certified complete:   ", gens.first_octant_certified)

# sanity: the torus conjugates each unipotent subgroup into itself,
# and nothing outside the torus commutes with all of it
assert verify_conjugation(Q, (2, 3), (1, 0), (Fraction(0), Fraction(1)))
assert verify_centralizer_torus(Q)
print()
print("conjugation and centralizer checks passed")
