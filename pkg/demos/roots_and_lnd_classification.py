"""Classify the homogeneous locally nilpotent derivations of a quotient.

Every liftable homogeneous degree falls into one of three buckets:
  root(i)                  -- a root of the semigroup that stays a root of
                              the ideal
  inner-escaping(ii)       -- an inner degree whose multiples reach the
                              support, so every weight vector works
  inner-constrained(iii)   -- an inner degree that never reaches the
                              support; only weights vanishing on the bad
                              part of the Hilbert basis survive
"""

from monoalg import (
    build_ideal,
    classify_lnd,
    demazure_roots,
    first_octant,
    lnd_degrees,
    roots_of_ideal,
)

Q2 = first_octant(2)
I = build_ideal(Q2, [(1, 5), (3, 2), (5, 0)])

print("roots of the octant up to bound 6, grouped by dual ray:")
for rho, alphas in demazure_roots(Q2, 6).groups:
    print("  rho =", rho, "->", list(alphas))

print()
print("roots preserved by the ideal", I.generators, ":")
for rho, alphas in roots_of_ideal(Q2, I, 6).groups:
    print("  rho =", rho, "->", list(alphas))

print()
samples = [((2, -1), (0, 1)), ((1, 0), (3, 7)), ((0, 1), (1, 0)),
           ((0, 1), (0, 1))]
for alpha, p in samples:
    v = classify_lnd(Q2, I, alpha, p)
    tag = v.case if v.is_lnd else "NOT LND (%s)" % v.reason
    print("alpha=%s p=%s  ->  %s" % (alpha, p, tag))

print()
print("degrees carrying a nontrivial locally nilpotent derivation")
print("of the square quotient K[x,y]/(x^2, y^2):")
for rep in lnd_degrees(Q2, build_ideal(Q2, [(2, 0), (0, 2)])):
    print("  alpha=%s case=%s effective dim=%d basis=%s"
          % (rep.alpha, rep.case, rep.effective_dim, rep.effective_basis))
