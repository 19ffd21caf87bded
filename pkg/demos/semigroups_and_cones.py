"""Walk through the combinatorics of a pointed affine semigroup.

Builds a couple of semigroups in Z^2, prints their dual description,
Hilbert bases, and the distinguished upper triangular pair attached to a
complete flag of faces.
"""

from monoalg import build_semigroup, first_octant

print("=== the first octant in Z^2 ===")
S = first_octant(2)
print("generators:     ", S.generators)
print("dual rays:      ", S.dual_rays)
print("hilbert basis:  ", S.hilbert_basis)
print("first octant?   ", S.is_first_octant())
print()

print("=== the hook <(1,0), (1,1), (1,2)> ===")
H = build_semigroup(2, [(1, 0), (1, 1), (1, 2)])
print("dual rays:      ", H.dual_rays)
print("ray generators: ", H.ray_generators)
print("hilbert basis:  ", H.hilbert_basis)
print("simplicial?     ", H.is_simplicial())
print("first octant?   ", H.is_first_octant())
print()

# a complete flag of faces picks out a triangular coordinate system
flag = H.complete_flag()
for i, face in enumerate(flag.faces):
    print("face %d: ray generators %s" % (i, face.ray_generators))
pair = H.upper_triangular_pair()
print("beta:      ", pair.beta)
print("beta dual: ", pair.beta_dual)
print("pairing matrix (upper triangular, positive diagonal):")
for row in pair.matrix:
    print("   ", row)
