"""Bigraded slices of the coordinate ring and the truncated window algebra.

The polynomial ring on a symplectic representation carries two gradings:
total degree, and torus weight (x_i carries beta_i, y_i carries -beta_i).
All computations happen in one (degree, weight) slice at a time, where the
moment-map quadrics impose finitely many linear relations on monomials.  An
algebra is assembled from the slices whose weights are differences of window
characters, with one vertex per window point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm

from .errors import (
    DimensionError,
    MalformedAlgebraError,
    ResourceBudgetError,
    UnsupportedShiftError,
)
from .lattice import (
    IntVec,
    content,
    dot,
    nullspace,
    sparse_rank,
    sparse_rref,
    vec_sub,
)
from .reps import MomentQuadric, SymplecticRep, moment_quadrics
from .zonotope import CharacterWindow

Monomial = tuple[int, ...]


def _compositions(n: int, parts: int):
    """All tuples of `parts` nonnegative ints summing to n, in lex order."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        yield (n,)
        return
    for head in range(n + 1):
        for tail in _compositions(n - head, parts - 1):
            yield (head,) + tail


@dataclass(frozen=True, eq=False)
class QuotientPiece:
    """One (degree, weight) slice of the ring modulo the quadric relations.

    monomials is the full lex-sorted ambient basis; representatives are the
    non-pivot monomials, which descend to a basis of the quotient slice.
    """

    degree: int
    weight: IntVec
    monomials: tuple[Monomial, ...]
    representatives: tuple[Monomial, ...]
    relation_rank: int
    _index: dict = field(repr=False)
    _pivots: dict = field(repr=False)

    @property
    def ambient_dim(self) -> int:
        return len(self.monomials)

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def reduce(self, mono: Monomial) -> dict[Monomial, Fraction]:
        """Expand a monomial of this slice over the representative basis."""
        col = self._index[mono]
        row = self._pivots.get(col)
        if row is None:
            return {mono: Fraction(1)}
        out = {}
        for c, v in row.items():
            if c != col:
                out[self.monomials[c]] = Fraction(-v, row[col])
        return out


class SliceRing:
    """Slice-by-slice model of the polynomial ring modulo quadric relations.

    Only homogeneous quadrics (shift zero) define a graded quotient; a
    nonzero shift raises UnsupportedShiftError.
    """

    def __init__(
        self,
        rep: SymplecticRep,
        quadrics: tuple[MomentQuadric, ...] = (),
        max_degree: int | None = None,
    ):
        for q in quadrics:
            if q.shift != 0:
                raise UnsupportedShiftError(
                    "graded slices need homogeneous quadrics; "
                    f"quadric {q.index} has shift {q.shift}"
                )
            if len(q.coefficients) != rep.num_pairs:
                raise DimensionError(
                    f"quadric {q.index} has {len(q.coefficients)} coefficients "
                    f"for {rep.num_pairs} coordinate pairs"
                )
        self.rep = rep
        self.quadrics = tuple(quadrics)
        self.max_degree = max_degree
        self._buckets: dict[int, dict[IntVec, tuple[Monomial, ...]]] = {}
        self._pieces: dict[tuple[int, IntVec], QuotientPiece] = {}

    # -- monomial bookkeeping ------------------------------------------------

    def weight_of(self, mono: Monomial) -> IntVec:
        e = self.rep.num_pairs
        s = self.rep.torus_rank
        hw = self.rep.half_weights
        return tuple(
            sum((mono[i] - mono[e + i]) * hw[i][k] for i in range(e))
            for k in range(s)
        )

    def bucket(self, n: int) -> dict[IntVec, tuple[Monomial, ...]]:
        """All degree-n monomials grouped by weight; lists stay lex-sorted."""
        if n < 0:
            return {}
        if self.max_degree is not None and n > self.max_degree:
            raise ResourceBudgetError(
                f"slice degree {n} exceeds the configured bound {self.max_degree}"
            )
        cached = self._buckets.get(n)
        if cached is None:
            grouped: dict[IntVec, list[Monomial]] = {}
            for mono in _compositions(n, self.rep.space_dim):
                grouped.setdefault(self.weight_of(mono), []).append(mono)
            cached = {w: tuple(ms) for w, ms in grouped.items()}
            self._buckets[n] = cached
        return cached

    def monomials(self, n: int, w: IntVec) -> tuple[Monomial, ...]:
        return self.bucket(n).get(tuple(w), ())

    def ambient_dim(self, n: int, w: IntVec) -> int:
        return len(self.monomials(n, w))

    # -- quotient slices -----------------------------------------------------

    def piece(self, n: int, w: IntVec) -> QuotientPiece:
        w = tuple(w)
        key = (n, w)
        cached = self._pieces.get(key)
        if cached is not None:
            return cached
        mons = self.monomials(n, w)
        index = {m: c for c, m in enumerate(mons)}
        rows = []
        if self.quadrics and n >= 2:
            e = self.rep.num_pairs
            # each quadric has weight zero, so its multiples in this slice
            # come from degree n-2 monomials of the same weight
            for base in self.monomials(n - 2, w):
                for q in self.quadrics:
                    row: dict[int, int] = {}
                    for i, c in enumerate(q.coefficients):
                        if c == 0:
                            continue
                        prod = list(base)
                        prod[i] += 1
                        prod[e + i] += 1
                        col = index[tuple(prod)]
                        row[col] = row.get(col, 0) + c
                    if row:
                        rows.append(row)
        pivots = sparse_rref(rows)
        reps = tuple(m for c, m in enumerate(mons) if c not in pivots)
        piece = QuotientPiece(
            degree=n,
            weight=w,
            monomials=mons,
            representatives=reps,
            relation_rank=len(pivots),
            _index=index,
            _pivots=pivots,
        )
        self._pieces[key] = piece
        return piece

    def dim(self, n: int, w: IntVec) -> int:
        return self.piece(n, w).dim

    def reduce(self, mono: Monomial) -> dict[Monomial, Fraction]:
        return self.piece(sum(mono), self.weight_of(mono)).reduce(mono)

    def multiply(self, m1: Monomial, m2: Monomial) -> dict[Monomial, Fraction]:
        return self.reduce(tuple(a + b for a, b in zip(m1, m2)))

    def multiply_dict(self, elem: dict[Monomial, Fraction], mono: Monomial
                      ) -> dict[Monomial, Fraction]:
        out: dict[Monomial, Fraction] = {}
        for m, c in elem.items():
            for m2, c2 in self.multiply(m, mono).items():
                v = out.get(m2, Fraction(0)) + c * c2
                if v:
                    out[m2] = v
                elif m2 in out:
                    del out[m2]
        return out


@lru_cache(maxsize=None)
def _ambient_ring(rep: SymplecticRep) -> SliceRing:
    return SliceRing(rep, ())


def hom_dimension(rep: SymplecticRep, n: int, w: IntVec) -> int:
    """Monomials of total degree n and torus weight w in the full ring."""
    return _ambient_ring(rep).ambient_dim(n, tuple(w))


def hilbert_block_series(ring: SliceRing, w: IntVec, upto: int) -> tuple[int, ...]:
    return tuple(ring.dim(n, w) for n in range(upto + 1))


# ---------------------------------------------------------------------------
# regular-sequence verification


@dataclass(frozen=True)
class RegSeqFailure:
    degree: int
    weight: IntVec
    got: int
    expected: int


@dataclass(frozen=True)
class RegSeqReport:
    passed: bool
    upto: int
    num_quadrics: int
    weights: tuple[IntVec, ...]
    first_failure: RegSeqFailure | None


def verify_regular_sequence(
    rep: SymplecticRep,
    window: CharacterWindow,
    upto: int,
    quadrics: tuple[MomentQuadric, ...] | None = None,
) -> RegSeqReport:
    """Compare quotient slice dimensions against the regular-sequence target.

    If the quadrics form a regular sequence, each weight-w Hilbert series of
    the quotient equals the ambient one times (1 - t^2)^q.  The scan runs
    degree-outer so the reported failure is at the first impossible degree.
    """
    if quadrics is None:
        quadrics = moment_quadrics(rep)
    ring = SliceRing(rep, quadrics)
    q = len(quadrics)
    weights = sorted({vec_sub(b, a) for a in window.points for b in window.points})
    failure = None
    for n in range(upto + 1):
        for w in weights:
            expected = sum(
                (-1) ** k * comb(q, k) * hom_dimension(rep, n - 2 * k, w)
                for k in range(min(q, n // 2) + 1)
            )
            got = ring.dim(n, w)
            if got != expected:
                failure = RegSeqFailure(degree=n, weight=w, got=got, expected=expected)
                break
        if failure:
            break
    return RegSeqReport(
        passed=failure is None,
        upto=upto,
        num_quadrics=q,
        weights=tuple(weights),
        first_failure=failure,
    )


# ---------------------------------------------------------------------------
# the truncated window algebra


class GradedQuiverAlgebra:
    """Finite-window endomorphism algebra, one vertex per window character.

    The block from vertex i to vertex j in degree n is the quotient slice of
    degree n and weight points[j] - points[i]; composition is multiplication
    of monomial representatives followed by reduction.
    """

    def __init__(
        self,
        rep: SymplecticRep,
        window: CharacterWindow,
        degree_bound: int,
        quadrics: tuple[MomentQuadric, ...] | None = None,
    ):
        if degree_bound < 2:
            raise ResourceBudgetError("degree bound must be at least 2")
        if quadrics is None:
            quadrics = moment_quadrics(rep)
        self.rep = rep
        self.window = window
        self.degree_bound = degree_bound
        self.quadrics = tuple(quadrics)
        self.ring = SliceRing(rep, self.quadrics, max_degree=degree_bound)

    @property
    def vertices(self) -> tuple[IntVec, ...]:
        return self.window.points

    @property
    def num_vertices(self) -> int:
        return len(self.window.points)

    def weight(self, i: int, j: int) -> IntVec:
        pts = self.window.points
        return vec_sub(pts[j], pts[i])

    def piece(self, i: int, j: int, n: int) -> QuotientPiece:
        return self.ring.piece(n, self.weight(i, j))

    def basis(self, i: int, j: int, n: int) -> tuple[Monomial, ...]:
        return self.piece(i, j, n).representatives

    def dim(self, i: int, j: int, n: int) -> int:
        return self.piece(i, j, n).dim

    def hilbert_matrix(self, n: int) -> tuple[tuple[int, ...], ...]:
        v = self.num_vertices
        return tuple(
            tuple(self.dim(i, j, n) for j in range(v)) for i in range(v)
        )

    def hilbert_matrices(self, upto: int | None = None) -> list[tuple[tuple[int, ...], ...]]:
        if upto is None:
            upto = self.degree_bound
        if upto > self.degree_bound:
            raise ResourceBudgetError(
                f"requested degree {upto} exceeds the algebra bound {self.degree_bound}"
            )
        return [self.hilbert_matrix(n) for n in range(upto + 1)]


def build_algebra(
    rep: SymplecticRep,
    window: CharacterWindow,
    degree_bound: int,
    quadrics: tuple[MomentQuadric, ...] | None = None,
) -> GradedQuiverAlgebra:
    return GradedQuiverAlgebra(rep, window, degree_bound, quadrics)


# ---------------------------------------------------------------------------
# quiver presentation by arrows and quadratic relations


def _variable_label(rep: SymplecticRep, mono: Monomial) -> str:
    e = rep.num_pairs
    pos = next(i for i, v in enumerate(mono) if v)
    return f"x{pos + 1}" if pos < e else f"y{pos - e + 1}"


@dataclass(frozen=True)
class Arrow:
    source: int
    target: int
    label: str
    monomial: Monomial


@dataclass(frozen=True)
class Relation:
    """Integer combination of length-2 paths that vanishes in the algebra.

    Each term is (coefficient, (first arrow index, second arrow index)),
    the path reading left to right.
    """

    source: int
    target: int
    terms: tuple[tuple[int, tuple[int, int]], ...]

    def as_string(self, arrows: tuple[Arrow, ...]) -> str:
        parts = []
        for coeff, (a, b) in self.terms:
            word = f"{arrows[a].label}*{arrows[b].label}"
            if not parts:
                if coeff == 1:
                    parts.append(word)
                elif coeff == -1:
                    parts.append(f"-{word}")
                else:
                    parts.append(f"{coeff}*{word}")
            else:
                sign = "+" if coeff > 0 else "-"
                mag = abs(coeff)
                parts.append(f"{sign} {word}" if mag == 1 else f"{sign} {mag}*{word}")
        return " ".join(parts)


@dataclass(frozen=True)
class QuiverPresentation:
    vertices: tuple[IntVec, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[Relation, ...]


def quiver_presentation(alg: GradedQuiverAlgebra) -> QuiverPresentation:
    """Arrows from the degree-1 blocks, relations from the degree-2 kernel."""
    v = alg.num_vertices
    arrows: list[Arrow] = []
    for i in range(v):
        for j in range(v):
            for mono in alg.basis(i, j, 1):
                arrows.append(Arrow(i, j, _variable_label(alg.rep, mono), mono))
    outgoing: dict[int, list[int]] = {i: [] for i in range(v)}
    for idx, a in enumerate(arrows):
        outgoing[a.source].append(idx)
    relations: list[Relation] = []
    for i in range(v):
        for k in range(v):
            paths = [
                (a, b)
                for a in outgoing[i]
                for b in outgoing[arrows[a].target]
                if arrows[b].target == k
            ]
            if not paths:
                continue
            piece = alg.piece(i, k, 2)
            coord = {m: r for r, m in enumerate(piece.representatives)}
            rows = [[Fraction(0)] * len(paths) for _ in range(piece.dim)]
            for col, (a, b) in enumerate(paths):
                prod = alg.ring.multiply(arrows[a].monomial, arrows[b].monomial)
                for m, c in prod.items():
                    rows[coord[m]][col] += c
            for vec in nullspace(rows, len(paths)):
                scale = lcm(*(f.denominator for f in vec)) if vec else 1
                ints = [int(f * scale) for f in vec]
                g = content(ints)
                if g:
                    ints = [x // g for x in ints]
                lead = next((x for x in ints if x), 0)
                if lead < 0:
                    ints = [-x for x in ints]
                terms = tuple(
                    (c, paths[idx]) for idx, c in enumerate(ints) if c
                )
                if terms:
                    relations.append(Relation(i, k, terms))
    return QuiverPresentation(
        vertices=alg.vertices,
        arrows=tuple(arrows),
        relations=tuple(relations),
    )


# ---------------------------------------------------------------------------
# numerical inverse of the Hilbert series


def hilbert_inverse_coefficients(
    matrices: list[tuple[tuple[int, ...], ...]]
) -> list[list[list[int]]]:
    """Coefficients P_n of the formal inverse of sum_n H_n (-t)^n.

    The degree-0 block must be the identity; the recursion is
    P_n = sum_{k>=1} (-1)^(k+1) H_k P_{n-k}.
    """
    if not matrices:
        raise MalformedAlgebraError("no degree-0 block given")
    v = len(matrices[0])
    ident = [[1 if i == j else 0 for j in range(v)] for i in range(v)]
    h0 = [list(r) for r in matrices[0]]
    if h0 != ident:
        raise MalformedAlgebraError("degree-0 block of the algebra is not the identity")

    def matmul(a, b):
        return [
            [sum(a[i][t] * b[t][j] for t in range(v)) for j in range(v)]
            for i in range(v)
        ]

    coeffs = [ident]
    for n in range(1, len(matrices)):
        acc = [[0] * v for _ in range(v)]
        for k in range(1, n + 1):
            term = matmul([list(r) for r in matrices[k]], coeffs[n - k])
            sign = 1 if k % 2 == 1 else -1
            for i in range(v):
                for j in range(v):
                    acc[i][j] += sign * term[i][j]
        coeffs.append(acc)
    return coeffs
