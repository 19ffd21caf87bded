"""Exhibit a derivation of a quotient that lifts to no toric degree.

Away from the smooth case some derivations of K[S]/I are invisible from the
ambient toric variety: their degree alpha is neither inner nor a root of S.
The witness construction produces such a degree together with the dual-ray
constraints it violates.
"""

from monoalg import compare_with_classification, non_liftable_witness
from monoalg.semigroup import build_semigroup

hook = build_semigroup(2, [(1, 0), (1, 1), (1, 2)])
w = non_liftable_witness(hook)

print("semigroup:", hook.generators)
print("ideal:    ", w.ideal.generators)
print("the map sending x^%s to x^%s has degree alpha = %s"
      % (w.source, w.target, w.alpha))
print("alpha violates:")
for rho, value in w.violated_constraints:
    print("   rho =", rho, " rho(alpha) =", value, "< 0, and alpha is not a"
          " root for rho")

report = compare_with_classification(hook, w.ideal)
print()
print("the oracle confirms: degree %s carries a derivation of the quotient"
      % (w.alpha,))
print("non-liftable candidate degrees:", list(report.extras))
