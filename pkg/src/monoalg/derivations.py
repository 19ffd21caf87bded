"""Homogeneous derivations of K[S] and their behaviour on K[S]/I.

A homogeneous derivation of degree alpha acts by x^m -> p(m) x^(m+alpha).
Inner degrees lie in S; outer degrees are Demazure roots, where p must be
proportional to the unique dual ray taking value -1.  The classification
of locally nilpotent derivations on the quotient splits into three cases:
a root of the ideal, an inner degree whose ray escapes into the support,
and an inner degree constrained by the basis elements that never escape.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .ideal import MonomialIdeal, build_ideal, complement, is_cofinite
from .lattice import (
    Vector,
    dot,
    intersect_rowspaces,
    nullspace,
    q_identity,
    row_rank,
    rref,
    vec_add,
    vec_sub,
)
from .semigroup import AffineSemigroup, sort_key

CASE_ROOT = "root(i)"
CASE_ESCAPING = "inner-escaping(ii)"
CASE_CONSTRAINED = "inner-constrained(iii)"


def root_ray(S: AffineSemigroup, alpha) -> Vector | None:
    """The unique dual ray with value -1 on alpha, if alpha is a root."""
    alpha = tuple(alpha)
    negative = None
    for rho in S.dual_rays:
        v = dot(alpha, rho)
        if v == -1 and negative is None:
            negative = rho
        elif v < 0:
            return None
    return negative


@dataclass(frozen=True)
class RootSet:
    """Demazure roots inside the sup-norm box, grouped by their dual ray."""

    bound: int
    groups: tuple[tuple[Vector, tuple[Vector, ...]], ...]

    def all_roots(self) -> list[Vector]:
        return sorted(
            (a for _, alphas in self.groups for a in alphas), key=sort_key
        )


def demazure_roots(S: AffineSemigroup, bound: int) -> RootSet:
    """All roots alpha with |alpha_i| <= bound, grouped by dual ray."""
    n = S.ambient_rank
    groups = {rho: [] for rho in S.dual_rays}
    for alpha in itertools.product(range(-bound, bound + 1), repeat=n):
        rho = root_ray(S, alpha)
        if rho is not None:
            groups[rho].append(alpha)
    return RootSet(
        bound,
        tuple(
            (rho, tuple(sorted(groups[rho], key=sort_key)))
            for rho in S.dual_rays
        ),
    )


def is_root_of_ideal(S: AffineSemigroup, I: MonomialIdeal, alpha) -> bool:
    """Root whose derivation preserves I: a_i + alpha in supp(I) whenever
    the generator a_i is off the hyperplane of the root's dual ray."""
    rho = root_ray(S, alpha)
    if rho is None:
        return False
    for a in I.generators:
        if dot(a, rho) > 0:
            target = vec_add(a, alpha)
            if not S.member(target) or not I.supp_contains(target):
                return False
    return True


def roots_of_ideal(S: AffineSemigroup, I: MonomialIdeal, bound: int) -> RootSet:
    base = demazure_roots(S, bound)
    return RootSet(
        bound,
        tuple(
            (rho, tuple(a for a in alphas if is_root_of_ideal(S, I, a)))
            for rho, alphas in base.groups
        ),
    )


def escape_steps(S: AffineSemigroup, I: MonomialIdeal, m, alpha, start=0):
    """Smallest k >= start with m + k*alpha in supp(I), or None.

    Exact for inner alpha: along each generator translate the dual-ray
    values move monotonically, so feasibility reduces to the rays where
    alpha vanishes and the answer is a ceiling computation, no search.
    """
    best = None
    for a in I.generators:
        k0 = start
        feasible = True
        for rho in S.dual_rays:
            r = dot(alpha, rho)
            gap = dot(a, rho) - dot(m, rho)
            if r == 0:
                if gap > 0:
                    feasible = False
                    break
            elif r > 0:
                if gap > 0:
                    k0 = max(k0, -(-gap // r))
            else:
                raise ValueError("escape check requires an inner degree")
        if feasible and (best is None or k0 < best):
            best = k0
    return best


@dataclass(frozen=True)
class LndVerdict:
    is_lnd: bool
    case: str | None
    reason: str


def _check_degree(S: AffineSemigroup, alpha):
    """Inner / outer split of a liftable degree; raises otherwise."""
    if S.member(alpha):
        return "inner", None
    rho = root_ray(S, alpha)
    if rho is not None:
        return "outer", rho
    raise ValueError("not a liftable homogeneous degree")


def _proportional(p, rho) -> bool:
    p = [Fraction(x) for x in p]
    return all(
        p[i] * rho[j] == p[j] * rho[i]
        for i in range(len(p)) for j in range(i + 1, len(p))
    ) and all(
        (x == 0) == (r == 0) for x, r in zip(p, rho)
    ) or all(x == 0 for x in p)


def classify_lnd(S: AffineSemigroup, I: MonomialIdeal, alpha, p) -> LndVerdict:
    """Decide local nilpotency of the induced derivation on K[S]/I."""
    alpha = tuple(alpha)
    kind, rho = _check_degree(S, alpha)
    if kind == "outer":
        if not _proportional(p, rho):
            raise ValueError(
                "outer degree requires p proportional to the dual ray %s"
                % (rho,)
            )
        if is_root_of_ideal(S, I, alpha):
            return LndVerdict(True, CASE_ROOT, "root of the ideal")
        return LndVerdict(
            False, None, "root derivation does not preserve the ideal"
        )
    # inner degree: nilpotency depends on escape into the support
    if escape_steps(S, I, alpha, alpha) is not None:
        return LndVerdict(
            True, CASE_ESCAPING, "a positive multiple of alpha lies in supp(I)"
        )
    bad = [
        h for h in S.hilbert_basis
        if dot(h, p) != 0 and escape_steps(S, I, h, alpha) is None
    ]
    if not bad:
        return LndVerdict(
            True, CASE_CONSTRAINED,
            "every generator with p(m) != 0 escapes into supp(I)",
        )
    return LndVerdict(
        False, None,
        "generator %s never reaches supp(I) along alpha" % (bad[0],)
    )


def is_trivial(S: AffineSemigroup, I: MonomialIdeal, alpha, p) -> bool:
    """The induced derivation vanishes on K[S]/I: every generator it moves
    lands in the support."""
    alpha = tuple(alpha)
    _check_degree(S, alpha)
    for h in S.hilbert_basis:
        if dot(h, p) != 0:
            target = vec_add(h, alpha)
            if not S.member(target) or not I.supp_contains(target):
                return False
    return True


@dataclass(frozen=True)
class LndDegreeReport:
    alpha: Vector
    case: str
    G_basis: tuple[tuple[Fraction, ...], ...]
    K_basis: tuple[tuple[Fraction, ...], ...]
    effective_basis: tuple[tuple[Fraction, ...], ...]
    effective_dim: int


def degree_report(S, I, alpha) -> LndDegreeReport | None:
    """G(alpha), the triviality kernel inside it, and the effective basis."""
    n = S.ambient_rank
    if S.member(alpha):
        if escape_steps(S, I, alpha, alpha) is not None:
            case, G = CASE_ESCAPING, q_identity(n)
        else:
            bad = [
                list(h) for h in S.hilbert_basis
                if escape_steps(S, I, h, alpha) is None
            ]
            case, G = CASE_CONSTRAINED, nullspace(bad, n)
    else:
        rho = root_ray(S, alpha)
        if rho is None or not is_root_of_ideal(S, I, alpha):
            return None
        case, G = CASE_ROOT, rref([[Fraction(x) for x in rho]])
    if not G:
        return None
    moved = []
    for h in S.hilbert_basis:
        target = vec_add(h, alpha)
        if not S.member(target) or not I.supp_contains(target):
            moved.append(list(h))
    K_full = nullspace(moved, n) if moved else q_identity(n)
    GK = intersect_rowspaces([list(g) for g in G], [list(k) for k in K_full], n)
    effective = []
    kept = [list(k) for k in GK]
    base_rank = len(kept)
    for g in G:
        if row_rank(kept + [list(g)]) > len(kept):
            effective.append(g)
            kept.append(list(g))
    return LndDegreeReport(
        alpha=tuple(alpha),
        case=case,
        G_basis=tuple(tuple(r) for r in G),
        K_basis=tuple(tuple(r) for r in GK),
        effective_basis=tuple(tuple(r) for r in rref([list(e) for e in effective])) if effective else (),
        effective_dim=len(G) - base_rank,
    )


def lnd_degrees(S: AffineSemigroup, I: MonomialIdeal, bound=None):
    """Degrees carrying a nonzero homogeneous LND of the quotient.

    For cofinite ideals the computation is exact: a nontrivial derivation
    moves some basis monomial to another, so its degree is a difference of
    complement elements or of a complement element and a Hilbert basis
    element; ideal roots in the induced box are added for completeness.
    """
    n = S.ambient_rank
    zero = tuple(0 for _ in range(n))
    cofinite, _ = is_cofinite(I)
    if cofinite:
        comp = complement(I)
        candidates = {
            vec_sub(c, m)
            for c in comp
            for m in list(comp) + list(S.hilbert_basis)
        }
        box = max(
            (abs(x) for a in candidates for x in a), default=1
        )
        candidates |= set(roots_of_ideal(S, I, max(box, 1)).all_roots())
    else:
        if bound is None:
            raise ValueError("bound required for a non-cofinite ideal")
        candidates = set(
            itertools.product(range(-bound, bound + 1), repeat=n)
        )
    reports = []
    for alpha in sorted(candidates, key=sort_key):
        if alpha == zero:
            continue
        rep = degree_report(S, I, alpha)
        if rep is not None and rep.effective_dim > 0:
            reports.append(rep)
    return reports


@dataclass(frozen=True)
class NonLiftableWitness:
    ideal: MonomialIdeal
    source: Vector
    target: Vector
    alpha: Vector
    violated_constraints: tuple[tuple[Vector, int], ...]


def hilbert_complement_ideal(S: AffineSemigroup) -> MonomialIdeal:
    """The ideal whose support is everything outside the Hilbert basis and 0:
    generated by pairwise sums of Hilbert basis elements."""
    sums = {
        vec_add(h1, h2)
        for h1 in S.hilbert_basis for h2 in S.hilbert_basis
    }
    return build_ideal(S, sums)


def non_liftable_witness(S: AffineSemigroup) -> NonLiftableWitness:
    """A derivation of K[S]/I_H admitting no lift to K[S].

    Exists exactly when S is not the first octant.  The simplicial branch
    sends a ray monomial with some dual value >= 2 to one on that facet;
    the non-simplicial branch sends a ray off two adjacent facets to a
    Hilbert element on both.  Either way the degree has forbidden negative
    dual values, so no homogeneous derivation of K[S] has that degree.
    """
    if S.is_first_octant():
        raise ValueError("every derivation lifts")
    ideal = hilbert_complement_ideal(S)
    if S.is_simplicial():
        for mu1 in S.hilbert_basis:
            for rho in S.dual_rays:
                if dot(mu1, rho) < 2:
                    continue
                mu2 = next(
                    (m for m in S.ray_generators if dot(m, rho) == 0), None
                )
                if mu2 is not None:
                    alpha = vec_sub(mu2, mu1)
                    return NonLiftableWitness(
                        ideal, mu1, mu2, alpha, ((rho, dot(alpha, rho)),)
                    )
        raise AssertionError("simplicial non-octant without a high dual value")
    for rho_a, rho_b in itertools.combinations(S.dual_rays, 2):
        mu1 = next(
            (h for h in S.hilbert_basis
             if dot(h, rho_a) == 0 and dot(h, rho_b) == 0),
            None,
        )
        mu = next(
            (m for m in S.ray_generators
             if dot(m, rho_a) > 0 and dot(m, rho_b) > 0),
            None,
        )
        if mu1 is not None and mu is not None:
            alpha = vec_sub(mu1, mu)
            return NonLiftableWitness(
                ideal, mu, mu1, alpha,
                ((rho_a, dot(alpha, rho_a)), (rho_b, dot(alpha, rho_b))),
            )
    raise AssertionError("non-simplicial cone without an adjacent facet pair")


def inner_outer_split(S: AffineSemigroup, derivations):
    """Partition (alpha, p) pairs into inner (alpha in S) and outer ones."""
    inner, outer = [], []
    for alpha, p in derivations:
        kind, _ = _check_degree(S, alpha)
        (inner if kind == "inner" else outer).append((tuple(alpha), tuple(p)))
    return inner, outer
