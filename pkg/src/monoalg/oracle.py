"""Brute-force ground truth for derivations of the quotient algebra.

Derivations are found by solving the Leibniz linear system directly, with
no input from the classification; graded pieces and nilpotency are then
read off the matrices.  The comparison report pits these dimensions
against the classified effective dimensions degree by degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .derivations import lnd_degrees
from .ideal import MonomialIdeal, fullify, is_full
from .lattice import nullspace, vec_sub
from .quotient import QuotientAlgebra, build_quotient, is_nilpotent_matrix
from .semigroup import AffineSemigroup, sort_key


@dataclass(frozen=True)
class DerivationSpace:
    basis: tuple  # tuple of d x d rational matrices
    dim: int


def leibniz_holds(Q: QuotientAlgebra, D) -> bool:
    """Exact check of D(e_i e_j) = D(e_i) e_j + e_i D(e_j) and D(1) = 0."""
    d = Q.dim
    cols = [tuple(D[i][j] for i in range(d)) for j in range(d)]
    zero = tuple(Fraction(0) for _ in range(d))
    if cols[0] != zero:
        return False
    basis_vec = [
        tuple(Fraction(1) if k == i else Fraction(0) for k in range(d))
        for i in range(d)
    ]
    for i in range(d):
        for j in range(i, d):
            k = Q.mult[i][j]
            lhs = cols[k] if k >= 0 else zero
            rhs = tuple(
                a + b for a, b in zip(
                    Q.multiply_vectors(cols[i], basis_vec[j]),
                    Q.multiply_vectors(basis_vec[i], cols[j]),
                )
            )
            if lhs != rhs:
                return False
    return True


def all_derivations(Q: QuotientAlgebra) -> DerivationSpace:
    """Echelonized basis of Der(B) from the full d^2-unknown system.

    Unknown (r, c) is entry D[r][c].  Equations: column 0 vanishes, and
    Leibniz on every basis pair, expanded through the multiplication table.
    """
    d = Q.dim
    nvars = d * d
    rows = []
    for r in range(d):
        row = [Fraction(0)] * nvars
        row[r * d] = Fraction(1)
        rows.append(row)
    for i in range(d):
        for j in range(i, d):
            k = Q.mult[i][j]
            for m in range(d):
                row = [Fraction(0)] * nvars
                if k >= 0:
                    row[m * d + k] += 1
                # D(e_i) e_j contributes D[l][i] whenever e_l e_j = e_m,
                # and symmetrically for e_i D(e_j)
                for l in range(d):
                    if Q.mult[l][j] == m:
                        row[l * d + i] -= 1
                    if Q.mult[i][l] == m:
                        row[l * d + j] -= 1
                if any(x != 0 for x in row):
                    rows.append(row)
    kernel = nullspace(rows, nvars)
    mats = tuple(
        tuple(tuple(vec[r * d + c] for c in range(d)) for r in range(d))
        for vec in kernel
    )
    for D in mats:
        assert leibniz_holds(Q, D)
    return DerivationSpace(mats, len(mats))


def graded_components(D, Q: QuotientAlgebra):
    """Split D by degree: entry (m', m) belongs to the component m' - m."""
    d = Q.dim
    out = {}
    for i in range(d):
        for j in range(d):
            if D[i][j] != 0:
                alpha = vec_sub(Q.basis[i], Q.basis[j])
                if alpha not in out:
                    out[alpha] = [[Fraction(0)] * d for _ in range(d)]
                out[alpha][i][j] = D[i][j]
    return {
        a: tuple(tuple(row) for row in m)
        for a, m in sorted(out.items(), key=lambda kv: sort_key(kv[0]))
    }


def _graded_derivation_space(Q: QuotientAlgebra, alpha):
    """Degree-alpha derivations via the small per-degree Leibniz system.

    A homogeneous map sends x^m to c_m x^(m+alpha); the unknowns are the
    c_m with m + alpha still in the basis, everything else is forced zero.
    """
    d = Q.dim
    lookup = {m: i for i, m in enumerate(Q.basis)}
    movers = [
        i for i, m in enumerate(Q.basis)
        if tuple(a + b for a, b in zip(m, alpha)) in lookup
    ]
    if not movers:
        return [], movers
    var = {i: k for k, i in enumerate(movers)}
    shifted = {
        i: lookup[tuple(a + b for a, b in zip(Q.basis[i], alpha))]
        for i in movers
    }
    rows = set()
    if 0 in var:
        rows.add(((var[0], 1),))
    for i in range(d):
        for j in range(i, d):
            k = Q.mult[i][j]
            entries = {}
            if k >= 0 and k in var:
                entries[var[k]] = entries.get(var[k], 0) + 1
            if i in var and Q.mult[shifted[i]][j] >= 0:
                entries[var[i]] = entries.get(var[i], 0) - 1
            if j in var and Q.mult[i][shifted[j]] >= 0:
                entries[var[j]] = entries.get(var[j], 0) - 1
            entries = {v: c for v, c in entries.items() if c != 0}
            if entries:
                rows.add(tuple(sorted(entries.items())))
    kernel = _sparse_nullspace(rows, len(movers))
    return kernel, movers


def _sparse_nullspace(rows, nvars):
    """Kernel basis of a sparse integer system given as (var, coeff) rows.

    Fraction-free elimination: rows stay integer dicts, cross-multiplied
    against pivot rows and divided by their gcd."""
    from math import gcd

    pivots = {}  # pivot var -> integer row dict
    for raw in sorted(rows):
        row = dict(raw)
        while row:
            piv = min(row)
            if piv not in pivots:
                pivots[piv] = row
                break
            p = pivots[piv]
            a, b = p[piv], row.pop(piv)
            new = {v: a * c for v, c in row.items()}
            for v, c in p.items():
                if v != piv:
                    new[v] = new.get(v, 0) - b * c
            row = {v: c for v, c in new.items() if c != 0}
            if row:
                g = 0
                for c in row.values():
                    g = gcd(g, c)
                if g > 1:
                    row = {v: c // g for v, c in row.items()}
    free = [v for v in range(nvars) if v not in pivots]
    # back-substitute each pivot against later variables for echelon output
    kernel = []
    for f in free:
        sol = [Fraction(0)] * nvars
        sol[f] = Fraction(1)
        for piv in sorted(pivots, reverse=True):
            acc = Fraction(0)
            prow = pivots[piv]
            for v, c in prow.items():
                if v != piv:
                    acc -= c * sol[v]
            sol[piv] = acc / prow[piv]
        kernel.append(sol)
    return kernel


def _component_matrix(Q, alpha, coeffs, movers):
    d = Q.dim
    lookup = {m: i for i, m in enumerate(Q.basis)}
    out = [[Fraction(0)] * d for _ in range(d)]
    for c, i in zip(coeffs, movers):
        j = lookup[tuple(a + b for a, b in zip(Q.basis[i], alpha))]
        out[j][i] = c
    return tuple(tuple(row) for row in out)


def homogeneous_lnd_dims(Q: QuotientAlgebra):
    """Degree -> dimension of the nilpotent homogeneous derivations.

    For alpha != 0 every homogeneous derivation is nilpotent (powers shift
    the degree off the finite basis); asserted on a representative, with a
    per-vector fallback.  Degree 0 derivations are diagonal, so the only
    nilpotent one is zero.
    """
    zero = tuple(0 for _ in range(Q.semigroup.ambient_rank))
    degrees = sorted(
        {vec_sub(m2, m1) for m1 in Q.basis for m2 in Q.basis}, key=sort_key
    )
    out = {}
    for alpha in degrees:
        kernel, movers = _graded_derivation_space(Q, alpha)
        if not kernel:
            continue
        if alpha == zero:
            out[alpha] = 0
            continue
        # alpha != 0: repeatedly adding alpha must leave the finite basis,
        # so every homogeneous derivation here is nilpotent; cheap check
        basis_set = set(Q.basis)
        for m in Q.basis:
            cur, steps = m, 0
            while cur in basis_set:
                cur = tuple(a + b for a, b in zip(cur, alpha))
                steps += 1
                assert steps <= len(Q.basis), "degree walk cycled"
        out[alpha] = len(kernel)
    return out


@dataclass(frozen=True)
class DegreeComparison:
    alpha: tuple
    oracle_dim: int
    classified_dim: int

    @property
    def match(self) -> bool:
        return self.oracle_dim == self.classified_dim


@dataclass(frozen=True)
class GradedComparisonReport:
    rows: tuple[DegreeComparison, ...]
    # oracle strictly larger: candidate non-liftable derivations
    extras: tuple[tuple, ...]
    mismatches: tuple[tuple, ...]

    @property
    def all_match(self) -> bool:
        return not self.mismatches and not self.extras


def compare_with_classification(S: AffineSemigroup, I: MonomialIdeal) -> GradedComparisonReport:
    """Oracle graded LND dimensions vs classified effective dimensions."""
    if not is_full(I):
        S, I = fullify(I)
    Q = build_quotient(S, I)
    oracle = homogeneous_lnd_dims(Q)
    classified = {rep.alpha: rep.effective_dim for rep in lnd_degrees(S, I)}
    degrees = sorted(set(oracle) | set(classified), key=sort_key)
    rows = []
    extras = []
    mismatches = []
    for alpha in degrees:
        o = oracle.get(alpha, 0)
        c = classified.get(alpha, 0)
        if o == c == 0:
            continue
        rows.append(DegreeComparison(alpha, o, c))
        if o != c:
            mismatches.append(alpha)
            if o > c:
                extras.append(alpha)
    return GradedComparisonReport(tuple(rows), tuple(extras), tuple(mismatches))
