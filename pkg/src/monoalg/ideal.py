"""Monomial ideals in semigroup algebras.

An ideal is stored by its exponent generators a_1,...,a_l inside a valid
semigroup; the list is minimalized on construction.  supp(I) is the union
of the translates a_k + S.  Cofiniteness is decided by the ray-multiple
criterion, with an explicit certificate either way.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .lattice import (
    Vector,
    dot,
    hermite_normal_form,
    make_matrix,
    vec_add,
    vec_sub,
)
from .semigroup import AffineSemigroup, build_semigroup, sort_key


@dataclass(frozen=True)
class CofinitenessCertificate:
    """Per-ray evidence for the cofiniteness verdict.

    When cofinite, ``multiples`` maps each ray generator to the smallest
    k >= 1 with k*mu in supp(I).  Otherwise ``failing_ray`` is a ray with
    no multiple in the support (so all its multiples avoid the ideal).
    """

    cofinite: bool
    multiples: tuple[tuple[Vector, int], ...]
    failing_ray: Vector | None = None


@dataclass(frozen=True)
class MonomialIdeal:
    parent: AffineSemigroup
    generators: tuple[Vector, ...]

    def supp_contains(self, m) -> bool:
        """m in supp(I), i.e. m - a_k in S for some generator a_k."""
        m = tuple(m)
        if not self.parent.member(m):
            raise ValueError("not a semigroup element")
        return _supp_contains(self, m)

    def is_zero(self) -> bool:
        return not self.generators


@lru_cache(maxsize=None)
def _supp_contains(ideal: MonomialIdeal, m: Vector) -> bool:
    S = ideal.parent
    return any(S.member(vec_sub(m, a)) for a in ideal.generators)


def build_ideal(S: AffineSemigroup, generators) -> MonomialIdeal:
    """Check the generators are semigroup members and minimalize the list."""
    gens = sorted({tuple(a) for a in generators}, key=sort_key)
    for a in gens:
        if not S.member(a):
            raise ValueError("ideal generator %s is not a semigroup element" % (a,))
    minimal = []
    for i, a in enumerate(gens):
        if not any(
            j != i and S.member(vec_sub(a, b)) for j, b in enumerate(gens)
        ):
            minimal.append(a)
    return MonomialIdeal(S, tuple(minimal))


def _multiple_bound(S: AffineSemigroup, I: MonomialIdeal, mu) -> int:
    """Past this k, membership of k*mu - a_i in S is monotone in k."""
    bound = 1
    for a in I.generators:
        for rho in S.dual_rays:
            r = dot(mu, rho)
            if r > 0:
                need = -(-dot(a, rho) // r)
                bound = max(bound, need)
    return bound


def is_cofinite(I: MonomialIdeal) -> tuple[bool, CofinitenessCertificate]:
    """Complement is finite iff every ray has a multiple in supp(I)."""
    S = I.parent
    if not I.generators:
        if not S.ray_generators:
            return True, CofinitenessCertificate(True, ())
        return False, CofinitenessCertificate(False, (), S.ray_generators[0])
    multiples = []
    for mu in S.ray_generators:
        bound = _multiple_bound(S, I, mu)
        k = next(
            (k for k in range(1, bound + 1)
             if I.supp_contains(tuple(k * x for x in mu))),
            None,
        )
        if k is None:
            return False, CofinitenessCertificate(False, tuple(multiples), mu)
        multiples.append((mu, k))
    return True, CofinitenessCertificate(True, tuple(multiples))


def complement(I: MonomialIdeal):
    """S \\ supp(I), sorted by (coordinate sum, lex); the quotient basis.

    Breadth-first closure from 0 under Hilbert-basis additions; correctness
    relies on the complement being downward closed, so every complement
    element is reached through complement elements.
    """
    S = I.parent
    ok, cert = is_cofinite(I)
    if not ok:
        raise ValueError(
            "complement infinite: ray %s has no multiple in the support"
            % (cert.failing_ray,)
        )
    zero = tuple(0 for _ in range(S.ambient_rank))
    seen = {zero}
    out = []
    queue = deque([zero])
    while queue:
        m = queue.popleft()
        out.append(m)
        for h in S.hilbert_basis:
            nxt = vec_add(m, h)
            if nxt not in seen and not I.supp_contains(nxt):
                seen.add(nxt)
                queue.append(nxt)
    return sorted(out, key=sort_key)


def is_full(I: MonomialIdeal) -> bool:
    """No ray generator of S lies in supp(I)."""
    return not any(I.supp_contains(mu) for mu in I.parent.ray_generators)


def _lattice_basis(vectors):
    """Rows of the Hermite form: a Z-basis of the lattice they generate."""
    h, _ = hermite_normal_form(make_matrix(vectors))
    return [row for row in h if any(x != 0 for x in row)]


def _coordinates(v, basis):
    """Integer coordinates of v in an upper triangular (HNF) basis."""
    v = list(v)
    coords = []
    for row in basis:
        piv = next(i for i, x in enumerate(row) if x != 0)
        c, rem = divmod(v[piv], row[piv])
        if rem != 0:
            raise ValueError("vector outside the lattice")
        v = [x - c * y for x, y in zip(v, row)]
        coords.append(c)
    if any(x != 0 for x in v):
        raise ValueError("vector outside the lattice")
    return tuple(coords)


def fullify(I: MonomialIdeal):
    """Smallest subsemigroup S' containing the complement, with the induced
    ideal I'; the quotient algebra is unchanged.

    S' is generated by the nonzero complement elements and re-embedded into
    Z^r when its span is a proper sublattice.  I' is the ideal of S' with
    supp(I') = supp(I) ∩ S'.
    """
    comp = complement(I)
    zero = tuple(0 for _ in range(I.parent.ambient_rank))
    gens = [m for m in comp if m != zero]
    if not gens:
        S0 = AffineSemigroup(0, (), (), (), ())
        return S0, MonomialIdeal(S0, ())
    basis = _lattice_basis(gens)
    embedded = [_coordinates(g, basis) for g in gens]
    S2 = build_semigroup(len(basis), embedded)
    comp2 = {_coordinates(m, basis) for m in gens} | {tuple(0 for _ in basis)}

    def in_old_supp(m2):
        orig = zero
        for c, row in zip(m2, basis):
            orig = tuple(o + c * r for o, r in zip(orig, row))
        return I.parent.member(orig) and I.supp_contains(orig)

    # minimal support generators all have the shape c + h with c in the
    # complement and h a Hilbert basis element
    candidates = sorted(
        {vec_add(c, h) for c in comp2 for h in S2.hilbert_basis},
        key=sort_key,
    )
    supp_gens = [m for m in candidates if in_old_supp(m)]
    return S2, build_ideal(S2, supp_gens)
