"""Exact integer and rational linear algebra on dense row-major matrices.

Matrices are tuples of tuples (immutable); vectors are tuples.  All integer
routines use Python's arbitrary-precision ints, all rational routines use
``fractions.Fraction``.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


def make_matrix(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = len(b[0])
    return tuple(
        tuple(sum(ra[k] * b[k][j] for k in range(len(ra))) for j in range(cols))
        for ra in a
    )


def mat_vec(a: Matrix, v) -> tuple:
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def dot(m, p) -> int:
    """Duality pairing <m, p>: the dot product of a lattice and a dual vector."""
    if len(m) != len(p):
        raise ValueError("vector length mismatch")
    return sum(x * y for x, y in zip(m, p))


def vec_add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def vec_sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def vec_scale(c, v):
    return tuple(c * x for x in v)


def primitive(v: Vector) -> Vector:
    """Divide by the gcd of the coordinates; zero vector is returned as is."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def det(a: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def hermite_normal_form(a: Matrix) -> tuple[Matrix, Matrix]:
    """Row-style HNF: returns (H, U) with H = U*A and U unimodular.

    Pivots are positive, entries above a pivot are reduced into [0, pivot).
    """
    if not a or not a[0]:
        raise ValueError("empty matrix")
    rows, cols = len(a), len(a[0])
    h = [list(r) for r in a]
    u = [list(r) for r in identity(rows)]
    pivot_row = 0
    for col in range(cols):
        if pivot_row >= rows:
            break
        # clear the column below pivot_row with extended gcd row operations
        for i in range(pivot_row + 1, rows):
            if h[i][col] == 0:
                continue
            r, s, t = _xgcd(h[pivot_row][col], h[i][col])
            p, q = h[pivot_row][col] // r, h[i][col] // r
            h[pivot_row], h[i] = (
                [s * x + t * y for x, y in zip(h[pivot_row], h[i])],
                [-q * x + p * y for x, y in zip(h[pivot_row], h[i])],
            )
            u[pivot_row], u[i] = (
                [s * x + t * y for x, y in zip(u[pivot_row], u[i])],
                [-q * x + p * y for x, y in zip(u[pivot_row], u[i])],
            )
        if h[pivot_row][col] == 0:
            continue
        if h[pivot_row][col] < 0:
            h[pivot_row] = [-x for x in h[pivot_row]]
            u[pivot_row] = [-x for x in u[pivot_row]]
        for i in range(pivot_row):
            q = h[i][col] // h[pivot_row][col]
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[pivot_row])]
                u[i] = [x - q * y for x, y in zip(u[i], u[pivot_row])]
        pivot_row += 1
    return make_matrix(h), make_matrix(u)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) = s*a + t*b, g >= 0.

    When a divides b the pair is the trivial one (keeps pivots stable).
    """
    if a != 0 and b % a == 0:
        return (a, 1, 0) if a > 0 else (-a, -1, 0)
    if a == 0:
        return (b, 0, 1) if b >= 0 else (-b, 0, -1)
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def smith_normal_form(a: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return (D, U, V) with D = U*A*V diagonal, d1 | d2 | ..., U, V unimodular."""
    if not a or not a[0]:
        raise ValueError("empty matrix")
    rows, cols = len(a), len(a[0])
    d = [list(r) for r in a]
    u = [list(r) for r in identity(rows)]
    v = [list(r) for r in identity(cols)]

    def row_op(i, j, col_from):
        # zero out d[j][col_from] using row i
        g, s, t = _xgcd(d[i][col_from], d[j][col_from])
        p, q = d[i][col_from] // g, d[j][col_from] // g
        d[i], d[j] = (
            [s * x + t * y for x, y in zip(d[i], d[j])],
            [-q * x + p * y for x, y in zip(d[i], d[j])],
        )
        u[i], u[j] = (
            [s * x + t * y for x, y in zip(u[i], u[j])],
            [-q * x + p * y for x, y in zip(u[i], u[j])],
        )

    def col_op(i, j, row_from):
        g, s, t = _xgcd(d[row_from][i], d[row_from][j])
        p, q = d[row_from][i] // g, d[row_from][j] // g
        for r in range(rows):
            d[r][i], d[r][j] = s * d[r][i] + t * d[r][j], -q * d[r][i] + p * d[r][j]
        for r in range(cols):
            v[r][i], v[r][j] = s * v[r][i] + t * v[r][j], -q * v[r][i] + p * v[r][j]

    k = 0
    while k < min(rows, cols):
        # find a nonzero pivot
        piv = next(
            (
                (i, j)
                for i in range(k, rows)
                for j in range(k, cols)
                if d[i][j] != 0
            ),
            None,
        )
        if piv is None:
            break
        i, j = piv
        if i != k:
            d[k], d[i] = d[i], d[k]
            u[k], u[i] = u[i], u[k]
        if j != k:
            for r in range(rows):
                d[r][k], d[r][j] = d[r][j], d[r][k]
            for r in range(cols):
                v[r][k], v[r][j] = v[r][j], v[r][k]
        while True:
            if d[k][k] < 0:
                d[k] = [-x for x in d[k]]
                u[k] = [-x for x in u[k]]
            for i in range(k + 1, rows):
                if d[i][k]:
                    row_op(k, i, k)
            for j in range(k + 1, cols):
                if d[k][j]:
                    col_op(k, j, k)
            if all(d[i][k] == 0 for i in range(k + 1, rows)):
                if all(d[k][j] == 0 for j in range(k + 1, cols)):
                    break
        if d[k][k] < 0:
            d[k] = [-x for x in d[k]]
            u[k] = [-x for x in u[k]]
        k += 1
    # enforce the divisibility chain d1 | d2 | ...
    changed = True
    while changed:
        changed = False
        for i in range(k - 1):
            j = i + 1
            if d[j][j] % d[i][i] != 0:
                # fold d[j][j] into row i, then re-diagonalize the 2x2 block
                d[i] = [x + y for x, y in zip(d[i], d[j])]
                u[i] = [x + y for x, y in zip(u[i], u[j])]
                while d[i][j] or d[j][i]:
                    for r in (i, j):
                        if d[r][r] < 0:
                            d[r] = [-x for x in d[r]]
                            u[r] = [-x for x in u[r]]
                    if d[i][j]:
                        col_op(i, j, i)
                    if d[j][i]:
                        row_op(i, j, i)
                for r in (i, j):
                    if d[r][r] < 0:
                        d[r] = [-x for x in d[r]]
                        u[r] = [-x for x in u[r]]
                changed = True
    return make_matrix(d), make_matrix(u), make_matrix(v)


def elementary_divisors(a: Matrix) -> list[int]:
    d, _, _ = smith_normal_form(a)
    out = []
    for k in range(min(len(d), len(d[0]))):
        if d[k][k]:
            out.append(d[k][k])
    return out


def sublattice_index(basis) -> int | str:
    """Index of the subgroup spanned by ``basis`` in the ambient lattice.

    Returns the integer index when the span has full rank, the string
    ``"infinite"`` otherwise.
    """
    basis = list(basis)
    if not basis:
        raise ValueError("empty generating set")
    n = len(basis[0])
    divs = elementary_divisors(make_matrix(basis))
    if len(divs) < n:
        return "infinite"
    idx = 1
    for d in divs:
        idx *= d
    return idx


def pairing_matrix(beta, beta_dual) -> Matrix:
    """Entry (i, j) is <mu_j, rho_i> for beta = (mu_j), beta_dual = (rho_i)."""
    beta, beta_dual = list(beta), list(beta_dual)
    if len(beta) != len(beta_dual):
        raise ValueError("size mismatch between the two bases")
    return tuple(tuple(dot(mu, rho) for mu in beta) for rho in beta_dual)


def verify_det_index(beta, beta_dual) -> bool:
    """Check |M/M'| * |N/N'| == |det A| for the pairing matrix A."""
    beta, beta_dual = list(beta), list(beta_dual)
    im = sublattice_index(beta)
    ind = sublattice_index(beta_dual)
    if im == "infinite" or ind == "infinite":
        raise ValueError("not linearly independent")
    a = pairing_matrix(beta, beta_dual)
    return im * ind == abs(det(a))


# ---------------------------------------------------------------------------
# rational (Fraction) routines

QMatrix = tuple[tuple[Fraction, ...], ...]


def q_matrix(rows) -> QMatrix:
    return tuple(tuple(Fraction(x) for x in r) for r in rows)


def q_identity(n: int) -> QMatrix:
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
    )


def q_mat_mul(a, b) -> QMatrix:
    cols = len(b[0])
    return tuple(
        tuple(sum((ra[k] * b[k][j] for k in range(len(ra))), Fraction(0))
              for j in range(cols))
        for ra in a
    )


def q_mat_vec(a, v):
    return tuple(sum((row[k] * v[k] for k in range(len(v))), Fraction(0)) for row in a)


def rref(rows) -> list[list[Fraction]]:
    """Reduced row echelon form over Q; zero rows are dropped."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return []
    cols = len(m[0])
    pivot_row = 0
    for col in range(cols):
        piv = next((i for i in range(pivot_row, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[pivot_row], m[piv] = m[piv], m[pivot_row]
        inv = 1 / m[pivot_row][col]
        m[pivot_row] = [x * inv for x in m[pivot_row]]
        for i in range(len(m)):
            if i != pivot_row and m[i][col] != 0:
                c = m[i][col]
                m[i] = [x - c * y for x, y in zip(m[i], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return [r for r in m[:pivot_row]]


def nullspace(rows, ncols: int) -> list[tuple[Fraction, ...]]:
    """RREF basis of the solution space of the homogeneous system rows * x = 0."""
    red = rref(rows)
    pivots = []
    for r in red:
        pivots.append(next(j for j, x in enumerate(r) if x != 0))
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, pj in zip(red, pivots):
            vec[pj] = -r[f]
        basis.append(tuple(vec))
    return [tuple(v) for v in rref(basis)]


def intersect_rowspaces(a_rows, b_rows, ncols: int) -> list[tuple[Fraction, ...]]:
    """RREF basis of rowspace(a) ∩ rowspace(b)."""
    a_rows, b_rows = list(a_rows), list(b_rows)
    if not a_rows or not b_rows:
        return []
    # x in both spans: x = u*A = v*B; solve [A^T | -B^T] on stacked (u, v)
    k, l = len(a_rows), len(b_rows)
    sys_rows = []
    for c in range(ncols):
        sys_rows.append(
            [Fraction(a_rows[i][c]) for i in range(k)]
            + [Fraction(-b_rows[j][c]) for j in range(l)]
        )
    sols = nullspace(sys_rows, k + l)
    vecs = []
    for s in sols:
        vec = [Fraction(0)] * ncols
        for i in range(k):
            for c in range(ncols):
                vec[c] += s[i] * a_rows[i][c]
        vecs.append(vec)
    return [tuple(v) for v in rref(vecs)]


def q_inverse(a) -> QMatrix:
    """Exact inverse of a square rational matrix via Gauss-Jordan."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(a)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                c = aug[i][col]
                aug[i] = [x - c * y for x, y in zip(aug[i], aug[col])]
    return tuple(tuple(r[n:]) for r in aug)


def row_rank(rows) -> int:
    return len(rref(rows))


def in_rowspace(v, rows) -> bool:
    base = rref(rows)
    return row_rank(base + [list(v)]) == len(base)
