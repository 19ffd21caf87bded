"""Affine semigroups: cones, dual rays, Hilbert bases, faces and flags.

A semigroup is given by integer generators in Z^n.  Construction validates
the standing hypotheses (pointed, saturated, minimally embedded) and
precomputes the dual rays, the ray generators and the Hilbert basis.  All
derived lists are sorted by (coordinate sum, lexicographic) so outputs are
reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .lattice import (
    Vector,
    dot,
    elementary_divisors,
    make_matrix,
    nullspace,
    pairing_matrix,
    primitive,
    q_identity,
    row_rank,
    vec_add,
    vec_sub,
)


class SemigroupError(ValueError):
    """Raised when the input generators violate a standing hypothesis."""


def sort_key(v: Vector):
    return (sum(v), v)


def dual_rays(generators) -> list[Vector]:
    """Primitive generators of the rays of the dual cone, sorted lex.

    Facet normals are found by solving for the one-dimensional null space of
    each (n-1)-subset of generators and keeping the orientations that are
    non-negative on the whole cone.  Exact and adequate at desk scale
    (rank <= 6, a handful of generators).
    """
    generators = [tuple(g) for g in generators]
    n = len(generators[0])
    if n == 1:
        signs = {g[0] > 0 for g in generators if g[0] != 0}
        if len(signs) != 1:
            return []
        return [(1,)] if signs.pop() else [(-1,)]
    normals = set()
    for subset in itertools.combinations(generators, n - 1):
        kernel = nullspace([list(g) for g in subset], n)
        if len(kernel) != 1:
            continue
        denom = 1
        for x in kernel[0]:
            denom = denom * x.denominator // _gcd(denom, x.denominator) \
                if x.denominator != 1 else denom
        ints = [int(x * denom) for x in kernel[0]]
        rho = primitive(tuple(ints))
        vals = [dot(g, rho) for g in generators]
        if all(v >= 0 for v in vals):
            normals.add(rho)
        elif all(v <= 0 for v in vals):
            normals.add(tuple(-x for x in rho))
    # drop normals that are not facets (their zero set has rank < n-1)
    rays = []
    for rho in normals:
        on_facet = [g for g in generators if dot(g, rho) == 0]
        if on_facet and row_rank([list(g) for g in on_facet]) == n - 1:
            rays.append(rho)
    return sorted(rays)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def ray_generators(generators, rays=None) -> list[Vector]:
    """Primitive generators of the one-dimensional faces of the cone."""
    generators = [tuple(g) for g in generators]
    n = len(generators[0])
    rays = dual_rays(generators) if rays is None else rays
    out = []
    for g in generators:
        if all(x == 0 for x in g):
            continue
        zero_at = [rho for rho in rays if dot(g, rho) == 0]
        if n == 1 or row_rank([list(r) for r in zero_at]) == n - 1:
            out.append(primitive(g))
    return sorted(set(out), key=sort_key)


@dataclass(frozen=True)
class Face:
    """Face of a semigroup cut out by a set of dual rays."""

    semigroup: "AffineSemigroup"
    defining_rays: tuple[Vector, ...]
    rank: int

    def contains(self, m) -> bool:
        return self.semigroup.member(m) and all(
            dot(m, rho) == 0 for rho in self.defining_rays
        )

    @property
    def ray_generators(self) -> tuple[Vector, ...]:
        return tuple(
            mu for mu in self.semigroup.ray_generators
            if all(dot(mu, rho) == 0 for rho in self.defining_rays)
        )


@dataclass(frozen=True)
class CompleteFlag:
    """Chain of faces {0} = F_0 < F_1 < ... < F_n = S with rank F_i = i."""

    faces: tuple[Face, ...]

    def __post_init__(self):
        for i, f in enumerate(self.faces):
            if f.rank != i:
                raise ValueError("flag face %d has rank %d" % (i, f.rank))


@dataclass(frozen=True)
class UpperTriangularPair:
    """Rays mu_i and dual rays rho_i with rho_i(mu_j) = 0 for i > j."""

    beta: tuple[Vector, ...]
    beta_dual: tuple[Vector, ...]

    def __post_init__(self):
        n = len(self.beta)
        for i in range(n):
            if dot(self.beta[i], self.beta_dual[i]) <= 0:
                raise ValueError("diagonal pairing not positive")
            for j in range(i):
                if dot(self.beta[j], self.beta_dual[i]) != 0:
                    raise ValueError("pairing not upper triangular")

    @property
    def matrix(self):
        return pairing_matrix(self.beta, self.beta_dual)


@dataclass(frozen=True)
class AffineSemigroup:
    """Pointed, saturated, minimally embedded affine semigroup in Z^n."""

    ambient_rank: int
    generators: tuple[Vector, ...]
    dual_rays: tuple[Vector, ...]
    ray_generators: tuple[Vector, ...]
    hilbert_basis: tuple[Vector, ...]

    def member(self, m) -> bool:
        """m lies in S, i.e. all dual rays are non-negative on m."""
        m = tuple(m)
        if len(m) != self.ambient_rank:
            raise ValueError("wrong ambient rank")
        return all(dot(m, rho) >= 0 for rho in self.dual_rays)

    def is_simplicial(self) -> bool:
        rays = self.ray_generators
        return len(rays) == self.ambient_rank and row_rank(
            [list(r) for r in rays]
        ) == self.ambient_rank

    def is_first_octant(self) -> bool:
        """S(1) is a Z-basis of the lattice and generates all of S."""
        rays = self.ray_generators
        if len(rays) != self.ambient_rank:
            return False
        divs = elementary_divisors(make_matrix(rays))
        if len(divs) != self.ambient_rank or any(d != 1 for d in divs):
            return False
        return set(rays) == set(self.hilbert_basis)

    def face(self, defining_rays) -> Face:
        defining_rays = tuple(defining_rays)
        members = [
            g for g in self.hilbert_basis
            if all(dot(g, rho) == 0 for rho in defining_rays)
        ]
        rank = row_rank([list(g) for g in members]) if members else 0
        return Face(self, defining_rays, rank)

    def complete_flag(self) -> CompleteFlag:
        """Deterministic flag built by greedy facet intersection."""
        n = self.ambient_rank
        chain = [self.face(())]
        defining: list[Vector] = []
        current_rank = n
        while current_rank > 0:
            for rho in self.dual_rays:
                if rho in defining:
                    continue
                cand = self.face(tuple(sorted(defining + [rho])))
                if cand.rank == current_rank - 1:
                    defining.append(rho)
                    chain.append(cand)
                    current_rank -= 1
                    break
            else:
                raise AssertionError("no facet drops the rank; cone corrupt")
        chain.reverse()
        return CompleteFlag(tuple(chain))

    def upper_triangular_pair(self, flag: CompleteFlag | None = None) -> UpperTriangularPair:
        """Choose mu_i in F_i \\ F_{i-1} and rho_i vanishing on F_{i-1}."""
        flag = self.complete_flag() if flag is None else flag
        n = self.ambient_rank
        beta = []
        beta_dual = []
        for i in range(1, n + 1):
            prev, cur = flag.faces[i - 1], flag.faces[i]
            mu = min(
                (m for m in cur.ray_generators if not prev.contains(m)),
                key=sort_key,
            )
            rho = min(
                r for r in self.dual_rays
                if all(dot(m, r) == 0 for m in prev.ray_generators)
                and dot(mu, r) > 0
            )
            beta.append(mu)
            beta_dual.append(rho)
        return UpperTriangularPair(tuple(beta), tuple(beta_dual))


def _zonotope_box(generators):
    n = len(generators[0])
    lo = [sum(min(0, g[i]) for g in generators) for i in range(n)]
    hi = [sum(max(0, g[i]) for g in generators) for i in range(n)]
    return lo, hi


def _cone_points_in_box(rays, lo, hi):
    n = len(lo)
    for point in itertools.product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        if all(dot(point, rho) >= 0 for rho in rays):
            yield point


def _coordinate_box(dual, bounds, n):
    """Bounding box of {x : 0 <= rho_j(x) <= R_j} by vertex enumeration."""
    constraints = []
    for rho, r in zip(dual, bounds):
        constraints.append((rho, 0))
        constraints.append((rho, r))
    lo = [0] * n
    hi = [0] * n
    for subset in itertools.combinations(constraints, n):
        rows = [[Fraction(x) for x in rho] for rho, _ in subset]
        if row_rank(rows) != n:
            continue
        vertex = _solve_exact(rows, [Fraction(v) for _, v in subset])
        if any(dot_frac(vertex, rho) < 0 or dot_frac(vertex, rho) > r
               for rho, r in zip(dual, bounds)):
            continue
        for i in range(n):
            lo[i] = min(lo[i], _floor(vertex[i]))
            hi[i] = max(hi[i], _ceil(vertex[i]))
    return lo, hi


def dot_frac(v, w):
    return sum((Fraction(a) * b for a, b in zip(v, w)), Fraction(0))


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _solve_exact(rows, rhs):
    n = len(rows)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(rows)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                c = aug[i][col]
                aug[i] = [x - c * y for x, y in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


def hilbert_basis_of_cone(rays, dual) -> list[Vector]:
    """Irreducible lattice points of the saturated cone spanned by ``rays``.

    Candidates are the cone points inside the bounding box of the polytope
    cut out by 0 <= rho_j <= R_j, with R_j the largest dual value attained
    on the zonotope of the ray generators; every irreducible element and
    every summand of one lives there.
    """
    rays = [tuple(r) for r in rays]
    n = len(rays[0])
    bounds = [sum(max(0, dot(g, rho)) for g in rays) for rho in dual]
    lo, hi = _coordinate_box(dual, bounds, n)
    candidates = sorted(
        (p for p in _cone_points_in_box(dual_to_rows(dual), lo, hi)
         if any(x != 0 for x in p)
         and all(dot(p, rho) <= b for rho, b in zip(dual, bounds))),
        key=sort_key,
    )
    cset = set(candidates)
    # order by a strictly positive functional: summands always come earlier
    pf = tuple(sum(c) for c in zip(*dual))
    by_weight = sorted(candidates, key=lambda p: dot(p, pf))
    basis = []
    for h in candidates:
        hw = dot(h, pf)
        reducible = False
        for s in by_weight:
            if dot(s, pf) >= hw:
                break
            rest = vec_sub(h, s)
            if any(x != 0 for x in rest) and rest in cset:
                reducible = True
                break
        if not reducible:
            basis.append(h)
    return basis


def dual_to_rows(dual):
    return [tuple(rho) for rho in dual]


def generated_member(generators, target, positive_form) -> bool:
    """Exact membership of ``target`` in the semigroup generated by the
    given generators, by bounded depth-first coefficient search.

    ``positive_form`` must be strictly positive on every nonzero generator;
    it bounds the coefficients.
    """
    gens = [g for g in generators if any(x != 0 for x in g)]
    target = tuple(target)

    def search(rest, idx):
        if all(x == 0 for x in rest):
            return True
        if idx == len(gens):
            return False
        g = gens[idx]
        weight = dot(g, positive_form)
        budget = dot(rest, positive_form)
        for c in range(budget // weight, -1, -1):
            nxt = tuple(r - c * x for r, x in zip(rest, g))
            if dot(nxt, positive_form) < 0:
                continue
            if search(nxt, idx + 1):
                return True
        return False

    return search(target, 0)


def build_semigroup(rank: int, generators) -> AffineSemigroup:
    """Validate the generators and assemble the semigroup with derived data.

    Raises SemigroupError when the input is not pointed, not minimally
    embedded (naming the offending elementary divisor) or not saturated
    (naming a witness cone point outside the generated semigroup).
    """
    gens = [tuple(g) for g in generators]
    if not gens:
        raise SemigroupError("no generators")
    if any(len(g) != rank for g in gens):
        raise SemigroupError("generator length differs from the ambient rank")
    nonzero = [g for g in gens if any(x != 0 for x in g)]
    if not nonzero:
        raise SemigroupError("semigroup is trivial; no nonzero generator")

    divs = elementary_divisors(make_matrix(nonzero))
    if len(divs) < rank:
        raise SemigroupError(
            "semigroup not minimally embedded: generators span rank %d < %d"
            % (len(divs), rank)
        )

    rays = dual_rays(nonzero)
    if row_rank([list(r) for r in rays]) != rank:
        raise SemigroupError("semigroup not pointed")

    ray_gens = ray_generators(nonzero, rays)
    hilbert = hilbert_basis_of_cone(ray_gens, rays)

    # saturation relative to the ambient lattice; this subsumes the
    # full-rank elementary divisor condition, checked again below anyway
    positive_form = tuple(sum(c) for c in zip(*rays))
    for h in hilbert:
        if not generated_member(nonzero, h, positive_form):
            raise SemigroupError(
                "semigroup not saturated: witness %s" % (h,)
            )

    bad = next((d for d in divs if d != 1), None)
    if bad is not None:
        raise SemigroupError(
            "semigroup not minimally embedded: elementary divisor %d != 1" % bad
        )

    return AffineSemigroup(
        ambient_rank=rank,
        generators=tuple(sorted(set(nonzero), key=sort_key)),
        dual_rays=tuple(rays),
        ray_generators=tuple(ray_gens),
        hilbert_basis=tuple(hilbert),
    )


def first_octant(rank: int) -> AffineSemigroup:
    """The standard semigroup Z^rank_{>=0}."""
    basis = [tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)]
    return build_semigroup(rank, basis)
