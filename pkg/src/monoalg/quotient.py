"""The finite-dimensional algebra K[S]/I and its automorphism data.

The basis is the complement of the support, sorted by (coordinate sum,
lex), with the unit monomial first.  Matrices act on that basis and are
exact rational.  Generators of the automorphism group come in three kinds:
the diagonal torus, unipotent one-parameter families exp(s*D) for each
classified LND degree, and toric automorphisms induced by lattice maps
preserving the semigroup and the ideal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .derivations import (
    LndDegreeReport,
    _check_degree,
    lnd_degrees,
)
from .ideal import MonomialIdeal, build_ideal, complement, fullify, is_cofinite, is_full
from .lattice import (
    Vector,
    dot,
    hermite_normal_form,
    make_matrix,
    q_identity,
    q_inverse,
    q_mat_mul,
    q_matrix,
    row_rank,
    vec_add,
)
from .semigroup import AffineSemigroup, sort_key

PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def default_torus_point(n: int):
    return tuple(PRIMES[:n])


@dataclass(frozen=True)
class QuotientAlgebra:
    semigroup: AffineSemigroup
    ideal: MonomialIdeal
    basis: tuple[Vector, ...]
    # mult[i][j] = basis index of m_i + m_j, or -1 when the product is 0
    mult: tuple[tuple[int, ...], ...]
    fullified: bool = False
    notice: str | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, m) -> int:
        return self.basis.index(tuple(m))

    def multiply_vectors(self, u, v):
        """Product of two coefficient vectors through the table."""
        d = self.dim
        out = [Fraction(0)] * d
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            for j, vj in enumerate(v):
                if vj == 0:
                    continue
                k = self.mult[i][j]
                if k >= 0:
                    out[k] += ui * vj
        return tuple(out)


def build_quotient(S: AffineSemigroup, I: MonomialIdeal) -> QuotientAlgebra:
    """Basis and multiplication table of K[S]/I; fullifies when needed."""
    ok, cert = is_cofinite(I)
    if not ok:
        raise ValueError(
            "quotient is infinite dimensional: ray %s has no multiple in "
            "the support" % (cert.failing_ray,)
        )
    notice = None
    full = True
    if not is_full(I):
        S, I = fullify(I)
        full = False
        notice = "ideal was not full; replaced by its fullification"
    basis = tuple(complement(I))
    lookup = {m: i for i, m in enumerate(basis)}
    table = []
    for mi in basis:
        row = []
        for mj in basis:
            row.append(lookup.get(vec_add(mi, mj), -1))
        table.append(tuple(row))
    return QuotientAlgebra(S, I, basis, tuple(table), not full, notice)


def derivation_matrix(Q: QuotientAlgebra, alpha, p):
    """Matrix of x^m -> p(m) x^(m+alpha) on the quotient basis."""
    _check_degree(Q.semigroup, alpha)
    alpha = tuple(alpha)
    d = Q.dim
    lookup = {m: i for i, m in enumerate(Q.basis)}
    cols = []
    for m in Q.basis:
        col = [Fraction(0)] * d
        c = Fraction(dot(m, p))
        target = lookup.get(vec_add(m, alpha))
        if target is not None and c != 0:
            col[target] = c
        cols.append(col)
    return tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))


def mat_pow(a, k):
    d = len(a)
    out = q_identity(d)
    for _ in range(k):
        out = q_mat_mul(out, a)
    return out


def is_nilpotent_matrix(a) -> bool:
    d = len(a)
    zero = tuple(tuple(Fraction(0) for _ in range(d)) for _ in range(d))
    return mat_pow(a, d) == zero


def exp_matrix(Q: QuotientAlgebra, alpha, p):
    """exp(D) for the derivation matrix D; exact since D is nilpotent."""
    D = derivation_matrix(Q, alpha, p)
    d = Q.dim
    if not is_nilpotent_matrix(D):
        raise ValueError("not locally nilpotent")
    out = q_identity(d)
    term = q_identity(d)
    for i in range(1, d):
        term = q_mat_mul(term, D)
        out = tuple(
            tuple(o + t / factorial(i) for o, t in zip(orow, trow))
            for orow, trow in zip(out, term)
        )
    return out


def exp_parametric(Q: QuotientAlgebra, alpha, p):
    """exp(s*D) with entries as polynomial coefficient tuples in s,
    constant term first."""
    D = derivation_matrix(Q, alpha, p)
    d = Q.dim
    if not is_nilpotent_matrix(D):
        raise ValueError("not locally nilpotent")
    powers = [q_identity(d)]
    for i in range(1, d):
        powers.append(q_mat_mul(powers[-1], D))
    entries = []
    for i in range(d):
        row = []
        for j in range(d):
            coeffs = [powers[k][i][j] / factorial(k) for k in range(d)]
            while len(coeffs) > 1 and coeffs[-1] == 0:
                coeffs.pop()
            row.append(tuple(coeffs))
        entries.append(tuple(row))
    return tuple(entries)


def specialize(parametric, s):
    s = Fraction(s)
    return tuple(
        tuple(sum((c * s ** k for k, c in enumerate(entry)), Fraction(0))
              for entry in row)
        for row in parametric
    )


def torus_matrix(Q: QuotientAlgebra, t):
    """Diagonal action x^m -> t(m) x^m with t(m) = prod t_i^{m_i}."""
    t = [Fraction(x) for x in t]
    if any(x == 0 for x in t):
        raise ValueError("torus point has a zero component")
    if len(t) != Q.semigroup.ambient_rank:
        raise ValueError("torus point has wrong length")
    d = Q.dim
    out = [[Fraction(0)] * d for _ in range(d)]
    for i, m in enumerate(Q.basis):
        w = Fraction(1)
        for ti, mi in zip(t, m):
            w *= ti ** mi
        out[i][i] = w
    return tuple(tuple(row) for row in out)


def character_value(t, alpha):
    w = Fraction(1)
    for ti, ai in zip(t, alpha):
        w *= Fraction(ti) ** ai
    return w


def is_algebra_automorphism(Q: QuotientAlgebra, A) -> bool:
    """Invertible, fixes the unit, and multiplicative on all basis pairs."""
    d = Q.dim
    if row_rank([list(r) for r in A]) != d:
        return False
    cols = [tuple(A[i][j] for i in range(d)) for j in range(d)]
    unit = tuple(Fraction(1) if k == 0 else Fraction(0) for k in range(d))
    if cols[0] != unit:
        return False
    for i in range(d):
        for j in range(i, d):
            k = Q.mult[i][j]
            image = (
                cols[k] if k >= 0
                else tuple(Fraction(0) for _ in range(d))
            )
            if Q.multiply_vectors(cols[i], cols[j]) != image:
                return False
    return True


@dataclass(frozen=True)
class ToricAutomorphism:
    lattice_map: tuple[tuple[int, ...], ...]
    # basis_permutation[i] = index of the image of basis element i
    basis_permutation: tuple[int, ...]

    def matrix(self, d):
        out = [[Fraction(0)] * d for _ in range(d)]
        for i, j in enumerate(self.basis_permutation):
            out[j][i] = Fraction(1)
        return tuple(tuple(row) for row in out)


def _integer_matrix(q):
    out = []
    for row in q:
        r = []
        for x in row:
            if x.denominator != 1:
                return None
            r.append(int(x))
        out.append(tuple(r))
    return tuple(out)


def toric_automorphisms(S: AffineSemigroup, I: MonomialIdeal):
    """Lattice maps preserving S and supp(I), via ray permutations.

    Each candidate permutation of S(1) determines at most one linear map;
    kept when it is in GL_n(Z), fixes the Hilbert basis as a set and
    preserves the support in both directions.
    """
    if not is_full(I):
        S, I = fullify(I)
    n = S.ambient_rank
    rays = list(S.ray_generators)
    idx = _independent_subset(rays, n)
    A = [[Fraction(rays[i][k]) for i in idx] for k in range(n)]
    A_inv = q_inverse(A)
    Q = build_quotient(S, I)
    out = []
    for sigma in itertools.permutations(range(len(rays))):
        B = [[Fraction(rays[sigma[i]][k]) for i in idx] for k in range(n)]
        g = _integer_matrix(q_mat_mul(B, A_inv))
        if g is None:
            continue
        if any(
            tuple(dot_rows(g, rays[i])) != rays[sigma[i]]
            for i in range(len(rays))
        ):
            continue
        det_ok = abs(_det_int(g)) == 1
        if not det_ok:
            continue
        image_h = {tuple(dot_rows(g, h)) for h in S.hilbert_basis}
        if image_h != set(S.hilbert_basis):
            continue
        if not _supp_preserved(S, I, g):
            continue
        perm = []
        ok = True
        for m in Q.basis:
            gm = tuple(dot_rows(g, m))
            if gm not in Q.basis:
                ok = False
                break
            perm.append(Q.basis.index(gm))
        if ok:
            out.append(ToricAutomorphism(g, tuple(perm)))
    return out


def _independent_subset(rays, n):
    for idx in itertools.combinations(range(len(rays)), n):
        if row_rank([list(rays[i]) for i in idx]) == n:
            return idx
    raise ValueError("rays do not span")


def dot_rows(g, v):
    return [sum(a * b for a, b in zip(row, v)) for row in g]


def _det_int(g):
    from .lattice import det
    return det(tuple(tuple(r) for r in g))


def _supp_preserved(S, I, g) -> bool:
    ginv = _integer_matrix(q_inverse([[Fraction(x) for x in row] for row in g]))
    if ginv is None:
        return False
    for mat in (g, ginv):
        for a in I.generators:
            image = tuple(dot_rows(mat, a))
            if not S.member(image) or not I.supp_contains(image):
                return False
    return True


@dataclass(frozen=True)
class UnipotentFamily:
    alpha: Vector
    p: tuple[Fraction, ...]
    parametric: tuple  # entries are coefficient tuples in s


@dataclass(frozen=True)
class AutGenerators:
    quotient: QuotientAlgebra
    torus_weights: tuple[Vector, ...]
    unipotent_families: tuple[UnipotentFamily, ...]
    toric: tuple[ToricAutomorphism, ...]
    first_octant_certified: bool
    # degrees alpha where -alpha also carries an LND; a toric piece may
    # then sit inside the connected component
    opposite_root_degrees: tuple[Vector, ...]
    warning: str | None = None


def aut_generators(S: AffineSemigroup, I: MonomialIdeal) -> AutGenerators:
    """Torus weights, unipotent families and toric generators of Aut."""
    Q = build_quotient(S, I)
    S, I = Q.semigroup, Q.ideal
    reports = lnd_degrees(S, I)
    families = []
    for rep in reports:
        for p in rep.effective_basis:
            families.append(
                UnipotentFamily(rep.alpha, p, exp_parametric(Q, rep.alpha, p))
            )
    degrees = {rep.alpha for rep in reports}
    opposite = tuple(sorted(
        (a for a in degrees if tuple(-x for x in a) in degrees), key=sort_key
    ))
    certified = S.is_first_octant()
    warning = None if certified else (
        "semigroup is not the first octant: the torus need not be maximal "
        "and these generators need not generate the automorphism group"
    )
    return AutGenerators(
        quotient=Q,
        torus_weights=Q.basis,
        unipotent_families=tuple(families),
        toric=tuple(toric_automorphisms(S, I)),
        first_octant_certified=certified,
        opposite_root_degrees=opposite,
        warning=warning,
    )


def verify_conjugation(Q: QuotientAlgebra, t, alpha, p) -> bool:
    """t . exp(D) . t^-1 == exp(t(alpha) D) as exact matrices."""
    T = torus_matrix(Q, t)
    E = exp_matrix(Q, alpha, p)
    lhs = q_mat_mul(q_mat_mul(T, E), q_inverse(T))
    scaled = tuple(character_value(t, alpha) * x for x in p)
    rhs = exp_matrix(Q, alpha, scaled)
    return lhs == rhs


def _in_integer_lattice(v, generators) -> bool:
    rows = [g for g in generators if any(x != 0 for x in g)]
    if not rows:
        return all(x == 0 for x in v)
    h, _ = hermite_normal_form(make_matrix(rows))
    v = list(v)
    for row in h:
        if all(x == 0 for x in row):
            continue
        piv = next(i for i, x in enumerate(row) if x != 0)
        if v[piv] % row[piv] != 0:
            return False
        c = v[piv] // row[piv]
        v = [x - c * y for x, y in zip(v, row)]
    return all(x == 0 for x in v)


def verify_centralizer_torus(Q: QuotientAlgebra) -> bool:
    """The centralizer of the torus inside Aut(K[S]/I) is the torus itself.

    Distinct basis weights force commuting matrices diagonal; a diagonal
    automorphism satisfies a_{m+m'} = a_m a_{m'}, so it is a torus point
    exactly when each relation vector of a basis label in terms of the
    unit coordinate vectors is generated by the multiplicative relations
    visible in the table.  Checked as integer lattice membership.
    """
    S = Q.semigroup
    if not S.is_first_octant():
        raise ValueError("centralizer check requires the first octant")
    if not is_full(Q.ideal):
        raise ValueError("centralizer check requires a full ideal")
    d = Q.dim
    n = S.ambient_rank
    for t in (default_torus_point(n), tuple(PRIMES[n:2 * n])):
        weights = [character_value(t, m) for m in Q.basis]
        if len(set(weights)) != d:
            return False
    # relation lattice on exponent vectors of the diagonal entries
    relations = []
    unit0 = [0] * d
    unit0[0] = 1
    relations.append(tuple(unit0))
    for i in range(d):
        for j in range(i, d):
            k = Q.mult[i][j]
            if k >= 0:
                rel = [0] * d
                rel[i] += 1
                rel[j] += 1
                rel[k] -= 1
                relations.append(tuple(rel))
    unit_vectors = []
    for i in range(n):
        e = tuple(1 if k == i else 0 for k in range(n))
        unit_vectors.append(Q.basis.index(e))
    for idx, m in enumerate(Q.basis):
        target = [0] * d
        target[idx] += 1
        for coord, basis_idx in zip(m, unit_vectors):
            target[basis_idx] -= coord
        if not _in_integer_lattice(tuple(target), relations):
            return False
    return True
