"""Minimal graded resolutions of vertex simples and Koszulity diagnostics.

Works entirely inside the truncated window algebra: projectives are direct
sums of vertex row-modules with degree shifts, syzygies are computed one
(degree, vertex) slice at a time, and minimal generators are read off by
reducing each syzygy slice against the multiples of the generators already
chosen.  Two independent signals are produced: the degrees in the generator
ledger (linear resolution or not) and the sign pattern of the inverted
Hilbert series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .algebra import GradedQuiverAlgebra, Monomial, hilbert_inverse_coefficients
from .lattice import IncrementalEchelon, sparse_kernel

# a projective summand is (vertex index, degree shift); a slice layout lists
# the basis labels (summand index, monomial) of one (degree, vertex) slice
Summand = tuple[int, int]
SliceVector = dict[int, Fraction]


@dataclass(frozen=True)
class StepGenerator:
    vertex: int
    degree: int
    vector: tuple[tuple[int, Fraction], ...]


@dataclass(frozen=True)
class VertexResolution:
    """Generator ledger of a minimal resolution of one vertex simple.

    steps[k] lists (vertex, degree) for the generators of the k-th
    projective.  status is "linear" when every step-k generator sits in
    degree k, "violation" as soon as one does not, and "truncation_limited"
    when the next step would need degrees beyond the algebra bound.
    exhausted means the final syzygy module had no nonzero slice up to the
    bound, so the resolution stops there as far as the truncation can see.
    """

    vertex: int
    depth: int
    degree_bound: int
    steps: tuple[tuple[tuple[int, int], ...], ...]
    status: str
    violation: tuple[int, int] | None
    exhausted: bool

    @property
    def betti_counts(self) -> tuple[int, ...]:
        return tuple(len(step) for step in self.steps)


def _slice_layout(
    alg: GradedQuiverAlgebra, summands: list[Summand], n: int, u: int
) -> list[tuple[int, Monomial]]:
    layout: list[tuple[int, Monomial]] = []
    for t, (vt, shift) in enumerate(summands):
        if n - shift < 0:
            continue
        for mono in alg.basis(vt, u, n - shift):
            layout.append((t, mono))
    return layout


def _integer_rows(rows: list[SliceVector]) -> list[dict[int, int]]:
    out = []
    for row in rows:
        if not row:
            continue
        scale = lcm(*(f.denominator for f in row.values()))
        out.append({c: int(f * scale) for c, f in row.items()})
    return out


def minimal_resolution(
    alg: GradedQuiverAlgebra,
    vertex_index: int,
    depth: int,
    degree_bound: int | None = None,
) -> VertexResolution:
    """Resolve the simple at one vertex by minimal projectives.

    Slices are scanned degree-outer then vertex-inner, so the generator
    ledger is deterministic.  The walk stops at the requested depth, at the
    first non-linear step, when a syzygy module vanishes inside the
    truncation window, or when the window is too short to continue.
    """
    bound = alg.degree_bound if degree_bound is None else degree_bound
    if bound > alg.degree_bound:
        bound = alg.degree_bound
    nv = alg.num_vertices
    steps: list[tuple[tuple[int, int], ...]] = [((vertex_index, 0),)]
    status = "linear"
    violation: tuple[int, int] | None = None
    exhausted = False

    # state describing d: P_current -> P_previous
    p_summands: list[Summand] = [(vertex_index, 0)]
    map_gens: list[StepGenerator] | None = None  # None: syzygies = radical of P_0
    pp_summands: list[Summand] | None = None

    for step in range(1, depth + 1):
        if step > bound:
            status = "truncation_limited"
            break
        found: list[StepGenerator] = []
        min_shift = min(shift for _, shift in p_summands)
        for n in range(max(min_shift, 1), bound + 1):
            for u in range(nv):
                dom_layout = _slice_layout(alg, p_summands, n, u)
                if not dom_layout:
                    continue
                if map_gens is None:
                    # radical of the rank-one projective: every positive slice
                    mvecs: list[SliceVector] = [
                        {c: Fraction(1)} for c in range(len(dom_layout))
                    ]
                else:
                    mvecs = _kernel_slice(
                        alg, map_gens, pp_summands, p_summands, dom_layout, n, u
                    )
                if not mvecs:
                    continue
                # span of the multiples of generators chosen so far; what is
                # left over in this slice needs new generators
                span = IncrementalEchelon()
                for g in found:
                    if g.degree > n:
                        continue
                    src_layout = _slice_layout(alg, p_summands, g.degree, g.vertex)
                    for lam in alg.basis(g.vertex, u, n - g.degree):
                        prod = _multiply_vector(
                            alg, dict(g.vector), src_layout, lam, dom_layout
                        )
                        for irow in _integer_rows([prod]):
                            span.add(irow)
                for vec in mvecs:
                    remainder = None
                    for irow in _integer_rows([vec]):
                        remainder = span.add(irow)
                    if remainder:
                        found.append(StepGenerator(
                            vertex=u, degree=n, vector=tuple(sorted(vec.items()))
                        ))
        if not found:
            exhausted = True
            break
        steps.append(tuple((g.vertex, g.degree) for g in found))
        bad = next((g for g in found if g.degree != step), None)
        if bad is not None:
            status = "violation"
            violation = (step, bad.degree)
            break
        pp_summands = list(p_summands)
        map_gens = found
        p_summands = [(g.vertex, g.degree) for g in found]

    return VertexResolution(
        vertex=vertex_index,
        depth=depth,
        degree_bound=bound,
        steps=tuple(steps),
        status=status,
        violation=violation,
        exhausted=exhausted,
    )


def _multiply_vector(
    alg: GradedQuiverAlgebra,
    vector: dict[int, Fraction],
    src_layout: list[tuple[int, Monomial]],
    lam: Monomial,
    dst_layout: list[tuple[int, Monomial]],
) -> SliceVector:
    """Right-multiply an element of a projective slice by a basis monomial."""
    index = {label: c for c, label in enumerate(dst_layout)}
    out: SliceVector = {}
    for col, coeff in vector.items():
        t, mono = src_layout[col]
        for m2, c2 in alg.ring.multiply(mono, lam).items():
            dst = index[(t, m2)]
            v = out.get(dst, Fraction(0)) + coeff * c2
            if v:
                out[dst] = v
            elif dst in out:
                del out[dst]
    return out


def _kernel_slice(
    alg: GradedQuiverAlgebra,
    gens: list[StepGenerator],
    codomain_summands: list[Summand],
    domain_summands: list[Summand],
    dom_layout: list[tuple[int, Monomial]],
    n: int,
    u: int,
) -> list[SliceVector]:
    """Kernel of the differential on the (n, u) slice of the domain."""
    cod_layout = _slice_layout(alg, codomain_summands, n, u)
    cod_index = {label: c for c, label in enumerate(cod_layout)}
    columns: list[SliceVector] = []
    for t, lam in dom_layout:
        g = gens[t]
        src_layout = _slice_layout(alg, codomain_summands, g.degree, g.vertex)
        image = _multiply_vector(alg, dict(g.vector), src_layout, lam, cod_layout)
        columns.append(image)
    rows: list[SliceVector] = [{} for _ in cod_layout]
    for col, image in enumerate(columns):
        for r, v in image.items():
            rows[r][col] = v
    return sparse_kernel(_integer_rows(rows), len(dom_layout))


# ---------------------------------------------------------------------------
# package-level diagnostics


@dataclass(frozen=True)
class KoszulReport:
    depth: int
    degree_bound: int
    resolutions: tuple[VertexResolution, ...]
    status: str
    first_violation: tuple[int, int, int] | None

    @property
    def all_exhausted(self) -> bool:
        return all(r.exhausted for r in self.resolutions)


def default_depth(alg: GradedQuiverAlgebra) -> int:
    e = alg.rep.num_pairs
    s = alg.rep.torus_rank
    return min(max(2 * e - 2 * s, 2), 4)


def koszul_check(
    alg: GradedQuiverAlgebra,
    depth: int | None = None,
    degree_bound: int | None = None,
) -> KoszulReport:
    """Resolve every vertex simple and aggregate the linearity verdicts."""
    if depth is None:
        depth = default_depth(alg)
    resolutions = tuple(
        minimal_resolution(alg, v, depth, degree_bound)
        for v in range(alg.num_vertices)
    )
    status = "linear"
    first_violation = None
    for r in resolutions:
        if r.status == "violation" and first_violation is None:
            status = "violation"
            first_violation = (r.vertex, r.violation[0], r.violation[1])
    if status == "linear" and any(r.status == "truncation_limited" for r in resolutions):
        status = "truncation_limited"
    return KoszulReport(
        depth=depth,
        degree_bound=degree_bound if degree_bound is not None else alg.degree_bound,
        resolutions=resolutions,
        status=status,
        first_violation=first_violation,
    )


@dataclass(frozen=True)
class NumericalKoszulReport:
    upto: int
    consistent: bool
    first_negative: tuple[int, int, int, int] | None
    inverse_coefficients: tuple


def numerical_koszul_consistency(matrices) -> NumericalKoszulReport:
    """Sign test on the inverse Hilbert series.

    For an algebra with linear resolutions the inverse of sum_n H_n (-t)^n
    has nonnegative coefficient matrices; a negative entry certifies that no
    such resolutions exist.  Nonnegativity alone proves nothing, so the
    result is only "consistent".
    """
    coeffs = hilbert_inverse_coefficients(list(matrices))
    first_negative = None
    for n, mat in enumerate(coeffs):
        for i, row in enumerate(mat):
            for j, val in enumerate(row):
                if val < 0:
                    first_negative = (n, i, j, val)
                    break
            if first_negative:
                break
        if first_negative:
            break
    return NumericalKoszulReport(
        upto=len(coeffs) - 1,
        consistent=first_negative is None,
        first_negative=first_negative,
        inverse_coefficients=tuple(
            tuple(tuple(row) for row in mat) for mat in coeffs
        ),
    )
