"""Cross-check the classification against a brute-force Leibniz solver.

The oracle knows nothing about roots or escape arguments: it solves the
Leibniz rule as a linear system on d x d matrices, splits the solutions by
degree, and counts nilpotent pieces.  Over the first octant the counts must
agree with the classification degree by degree.
"""

from monoalg import (
    all_derivations,
    build_ideal,
    build_quotient,
    compare_with_classification,
    first_octant,
    homogeneous_lnd_dims,
)
from monoalg.semigroup import build_semigroup

Q2 = first_octant(2)
ideal = build_ideal(Q2, [(2, 0), (1, 1), (0, 2)])
Q = build_quotient(Q2, ideal)

space = all_derivations(Q)
print("the quotient K[x,y]/(x^2, xy, y^2) has a %d-dimensional derivation"
      " space" % space.dim)
print("nilpotent homogeneous pieces by degree:")
for alpha, dim in homogeneous_lnd_dims(Q).items():
    print("  %s -> %d" % (alpha, dim))

report = compare_with_classification(Q2, ideal)
print("oracle agrees with the classification:", report.all_match)

print()
print("--- over a singular semigroup the picture changes ---")
hook = build_semigroup(2, [(1, 0), (1, 1), (1, 2)])
squared = build_ideal(hook, [(2, j) for j in range(5)])
report = compare_with_classification(hook, squared)
print("all match:", report.all_match)
print("degrees where the oracle finds more than lifts from the ambient"
      " space:", list(report.extras))
