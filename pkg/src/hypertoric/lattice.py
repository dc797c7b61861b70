"""Exact integer and rational linear algebra for small dense and sparse systems.

Everything runs on Python ints and fractions.Fraction so that all downstream
predicates (membership, rank, genericity) are exact equality tests.  Matrices
are lists of rows; vectors are tuples.  Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionError

IntVec = tuple[int, ...]


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise DimensionError(f"vector length mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def vec_add(u: IntVec, v: IntVec) -> IntVec:
    if len(u) != len(v):
        raise DimensionError(f"vector length mismatch: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: IntVec, v: IntVec) -> IntVec:
    if len(u) != len(v):
        raise DimensionError(f"vector length mismatch: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u: IntVec) -> IntVec:
    return tuple(-a for a in u)


def vec_scale(c, u: Sequence) -> tuple:
    return tuple(c * a for a in u)


def content(v: Sequence[int]) -> int:
    """Gcd of the absolute values of the entries (0 for the zero vector)."""
    g = 0
    for a in v:
        g = gcd(g, abs(a))
    return g


def primitive(v: Sequence[int]) -> IntVec:
    """Divide by the content and make the first nonzero entry positive."""
    g = content(v)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    w = tuple(a // g for a in v)
    for a in w:
        if a:
            return w if a > 0 else vec_neg(w)
    raise AssertionError("unreachable")


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
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


# ---------------------------------------------------------------------------
# dense rational elimination


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        sel = None
        for r in range(row, len(mat)):
            if mat[r][col]:
                sel = r
                break
        if sel is None:
            continue
        mat[row], mat[sel] = mat[sel], mat[row]
        pv = mat[row][col]
        mat[row] = [x / pv for x in mat[row]]
        for r in range(len(mat)):
            if r != row and mat[r][col]:
                c = mat[r][col]
                mat[r] = [x - c * y for x, y in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
        if row == len(mat):
            break
    return mat[:row], pivots


def rank(vectors: Iterable[Sequence]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    n = len(rows[0])
    for r in rows:
        if len(r) != n:
            raise DimensionError("rank of ragged matrix")
    _, pivots = rref(rows)
    return len(pivots)


def solve_exact(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """One exact solution of rows * x = rhs, or None if inconsistent.

    Free variables are set to zero, which makes the answer deterministic.
    """
    rows = [list(r) for r in rows]
    if len(rows) != len(rhs):
        raise DimensionError("system and right-hand side disagree")
    if not rows:
        return []
    ncols = len(rows[0])
    aug = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    sol = [Fraction(0)] * ncols
    for r, p in zip(red, pivots):
        sol[p] = r[-1]
    return sol


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : rows * x = 0}, one vector per free column, ascending."""
    mat = [[Fraction(x) for x in r] for r in rows]
    red, pivots = rref(mat)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, p in zip(red, pivots):
            vec[p] = -r[free]
        basis.append(vec)
    return basis


# ---------------------------------------------------------------------------
# integer lattice computations


def int_kernel_basis(rows: Sequence[Sequence[int]], ncols: int) -> list[IntVec]:
    """Lattice basis of the integer kernel {u in Z^ncols : row . u = 0}.

    Column reduction by unimodular operations; the result is a basis of the
    saturated kernel sublattice, so a one-dimensional kernel yields a
    primitive vector.
    """
    mat = [list(r) for r in rows]
    for r in mat:
        if len(r) != ncols:
            raise DimensionError("kernel of ragged matrix")
    u = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def combine(j0: int, j1: int, a: int, b: int):
        # col_j0, col_j1 <- (x*col_j0 + y*col_j1, -(b/g)*col_j0 + (a/g)*col_j1)
        g, x, y = xgcd(a, b)
        p, q = -(b // g), a // g
        for m in (mat, u):
            for row in m:
                c0, c1 = row[j0], row[j1]
                row[j0] = x * c0 + y * c1
                row[j1] = p * c0 + q * c1

    lead = 0
    for i in range(len(mat)):
        piv = None
        for j in range(lead, ncols):
            if mat[i][j]:
                piv = j
                break
        if piv is None:
            continue
        for j in range(piv + 1, ncols):
            if mat[i][j]:
                combine(piv, j, mat[i][piv], mat[i][j])
        if piv != lead:
            for m in (mat, u):
                for row in m:
                    row[piv], row[lead] = row[lead], row[piv]
        lead += 1
    basis = []
    for j in range(lead, ncols):
        basis.append(tuple(u[i][j] for i in range(ncols)))
    return basis


def smith_invariant_factors(mat: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    a = [list(r) for r in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    factors: list[int] = []
    top = 0
    while top < min(m, n):
        # find the smallest nonzero entry in the remaining block
        best = None
        for i in range(top, m):
            for j in range(top, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        a[top], a[bi] = a[bi], a[top]
        for row in a:
            row[top], row[bj] = row[bj], row[top]
        # clear row and column by division steps
        dirty = True
        while dirty:
            dirty = False
            for i in range(top + 1, m):
                if a[i][top]:
                    q = a[i][top] // a[top][top]
                    a[i] = [x - q * y for x, y in zip(a[i], a[top])]
                    if a[i][top]:
                        a[top], a[i] = a[i], a[top]
                        dirty = True
            for j in range(top + 1, n):
                if a[top][j]:
                    q = a[top][j] // a[top][top]
                    for row in a:
                        row[j] -= q * row[top]
                    if a[top][j]:
                        for row in a:
                            row[top], row[j] = row[j], row[top]
                        dirty = True
        factors.append(abs(a[top][top]))
        top += 1
    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            x, y = factors[i], factors[i + 1]
            if y % x:
                g = gcd(x, y)
                factors[i], factors[i + 1] = g, x * y // g
                changed = True
    return tuple(f for f in factors if f)


def int_inverse(mat: Sequence[Sequence[int]]) -> list[IntVec]:
    """Inverse of a unimodular integer matrix, as integer rows."""
    n = len(mat)
    for r in mat:
        if len(r) != n:
            raise DimensionError("inverse of non-square matrix")
    aug = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(mat)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    inv = []
    for row in red:
        tail = row[n:]
        if any(x.denominator != 1 for x in tail):
            raise ValueError("matrix is not unimodular")
        inv.append(tuple(int(x) for x in tail))
    return inv


def hyperplane_normals(vectors: Sequence[IntVec], dim: int | None = None) -> list[IntVec]:
    """Canonical primitive normals of every hyperplane spanned by the input.

    A hyperplane counts when some subset of the vectors has rank dim-1 and
    spans it.  For dim <= 1 there are no such hyperplanes (the origin is not
    counted), so the list is empty.
    """
    if dim is None:
        if not vectors:
            raise DimensionError("cannot infer ambient dimension from no vectors")
        dim = len(vectors[0])
    for v in vectors:
        if len(v) != dim:
            raise DimensionError("mixed vector lengths")
    if dim <= 1:
        return []
    dirs = sorted({primitive(v) for v in vectors if any(v)})
    normals = set()
    for sub in combinations(dirs, dim - 1):
        if rank(sub) != dim - 1:
            continue
        ker = int_kernel_basis(sub, dim)
        if len(ker) == 1:
            normals.add(primitive(ker[0]))
    return sorted(normals)


# ---------------------------------------------------------------------------
# sparse integer elimination (rows are dicts {column: value})

SparseRow = dict[int, int]


def _normalize_sparse(row: SparseRow) -> SparseRow:
    g = 0
    for v in row.values():
        g = gcd(g, abs(v))
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _eliminate(row: SparseRow, pivot_row: SparseRow, col: int) -> SparseRow:
    a, b = pivot_row[col], row[col]
    out = {c: a * v for c, v in row.items()}
    for c, v in pivot_row.items():
        w = out.get(c, 0) - b * v
        if w:
            out[c] = w
        elif c in out:
            del out[c]
    return _normalize_sparse(out)


def sparse_echelon(rows: Iterable[SparseRow]) -> dict[int, SparseRow]:
    """Row echelon form of sparse integer rows; returns {pivot column: row}.

    Pivots are chosen at the smallest column index, so with lexicographically
    sorted column labels the eliminated columns are the lex-earliest ones.
    """
    piv: dict[int, SparseRow] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            j = min(r)
            if j in piv:
                r = _eliminate(r, piv[j], j)
            else:
                r = _normalize_sparse(r)
                if r[j] < 0:
                    r = {c: -v for c, v in r.items()}
                piv[j] = r
                break
    return piv


def sparse_rank(rows: Iterable[SparseRow]) -> int:
    return len(sparse_echelon(rows))


class IncrementalEchelon:
    """Echelon form that accepts rows one at a time.

    add() reduces the row against the pivots collected so far; a nonzero
    remainder is stored as a new pivot row and returned, a full reduction
    returns None.
    """

    def __init__(self):
        self.pivots: dict[int, SparseRow] = {}

    def add(self, row: SparseRow) -> SparseRow | None:
        r = {c: v for c, v in row.items() if v}
        while r:
            j = min(r)
            if j in self.pivots:
                r = _eliminate(r, self.pivots[j], j)
            else:
                r = _normalize_sparse(r)
                if r[j] < 0:
                    r = {c: -v for c, v in r.items()}
                self.pivots[j] = r
                return r
        return None

    @property
    def rank(self) -> int:
        return len(self.pivots)


def sparse_rref(rows: Iterable[SparseRow]) -> dict[int, SparseRow]:
    """Fully reduced echelon form: each pivot column occurs in one row only."""
    piv = sparse_echelon(rows)
    for j in sorted(piv, reverse=True):
        row = piv[j]
        targets = [c for c in row if c != j and c in piv]
        for c in sorted(targets):
            row = _eliminate(row, piv[c], c)
        if row[j] < 0:
            row = {c: -v for c, v in row.items()}
        piv[j] = row
    return piv


def sparse_kernel(rows: Iterable[SparseRow], ncols: int) -> list[dict[int, Fraction]]:
    """Basis of {x : row . x = 0 for all rows}, one vector per free column."""
    piv = sparse_rref(rows)
    basis = []
    for free in range(ncols):
        if free in piv:
            continue
        vec: dict[int, Fraction] = {free: Fraction(1)}
        for p, row in piv.items():
            if free in row:
                vec[p] = Fraction(-row[free], row[p])
        basis.append(vec)
    return basis
