"""Monomial ideals as staircases: cofiniteness, complements, fullification."""

from monoalg import build_ideal, complement, first_octant, fullify, is_cofinite, is_full

Q2 = first_octant(2)

I = build_ideal(Q2, [(0, 5), (3, 2), (6, 0)])
print("generators (minimalized):", I.generators)
ok, cert = is_cofinite(I)
print("cofinite:", ok, " ray multiples in supp:", cert.multiples)

basis = complement(I)
print("complement has", len(basis), "elements")

# draw the staircase: o = complement, . = support
height = max(m[1] for m in basis) + 2
width = max(m[0] for m in basis) + 2
for y in range(height - 1, -1, -1):
    row = "".join("o " if (x, y) in set(basis) else ". " for x in range(width))
    print("   " + row)

print()
print("--- an ideal that is not full ---")
J = build_ideal(Q2, [(0, 1), (2, 0)])
print("generators:", J.generators, " full:", is_full(J))
S2, J2 = fullify(J)
print("after fullification the ambient semigroup shrinks:")
print("  new semigroup generators:", S2.generators)
print("  new ideal generators:    ", J2.generators)
print("  new complement:          ", complement(J2))
