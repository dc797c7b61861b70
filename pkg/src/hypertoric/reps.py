"""Symplectic torus representations given by integer half-weight vectors.

A rank-s torus acting on C^(2e) in paired coordinates (x_i, y_i) is encoded
by e half-weights beta_i in Z^s; the action on x_i has weight beta_i and on
y_i weight -beta_i.  This module validates such data, produces the moment-map
quadrics, tests the weight configuration for genericity, splits off the
non-generic directions, and bounds the codimension of the non-free locus.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import (
    DimensionError,
    NonFaithfulError,
    ReductionError,
    ResourceBudgetError,
)
from .lattice import (
    IntVec,
    dot,
    int_inverse,
    int_kernel_basis,
    primitive,
    rank,
    smith_invariant_factors,
    vec_neg,
)


@dataclass(frozen=True)
class SymplecticRep:
    """Weight data of a torus action on a symplectic vector space.

    torus_rank: rank s of the acting torus.
    half_weights: e vectors in Z^s; the full weight list is these followed
        by their negatives.
    """

    torus_rank: int
    half_weights: tuple[IntVec, ...]

    def __post_init__(self):
        if self.torus_rank < 0:
            raise DimensionError("torus rank must be nonnegative")
        hw = tuple(tuple(int(x) for x in w) for w in self.half_weights)
        for w in hw:
            if len(w) != self.torus_rank:
                raise DimensionError(
                    f"half-weight {w} has length {len(w)}, expected {self.torus_rank}"
                )
        object.__setattr__(self, "half_weights", hw)

    @property
    def num_pairs(self) -> int:
        return len(self.half_weights)

    @property
    def space_dim(self) -> int:
        return 2 * len(self.half_weights)

    @property
    def weights(self) -> tuple[IntVec, ...]:
        """All 2e weights: beta_1..beta_e, then -beta_1..-beta_e."""
        return self.half_weights + tuple(vec_neg(w) for w in self.half_weights)

    def drop_pair(self, i: int) -> "SymplecticRep":
        hw = self.half_weights
        return SymplecticRep(self.torus_rank, hw[:i] + hw[i + 1:])


@dataclass(frozen=True)
class ValidationReport:
    torus_rank: int
    num_pairs: int
    weight_rank: int
    kernel_rank: int
    faithful: bool
    invariant_factors: tuple[int, ...]
    strictly_faithful: bool
    assumptions: tuple[str, ...]


# Conventions baked into every analysis; repeated in reports so downstream
# consumers see them without reading the source.
STANDING_ASSUMPTIONS = (
    "weights come in opposite pairs (beta_i, -beta_i), so only the half-weights are stored",
    "genericity of the weight configuration is decided by deleting whole coordinate pairs",
)


def validate(rep: SymplecticRep) -> ValidationReport:
    s = rep.torus_rank
    wr = rank(rep.half_weights) if rep.half_weights else 0
    if s == 0:
        wr = 0
    inv = smith_invariant_factors(list(rep.half_weights)) if rep.half_weights else ()
    strict = (wr == s) and all(f == 1 for f in inv)
    return ValidationReport(
        torus_rank=s,
        num_pairs=rep.num_pairs,
        weight_rank=wr,
        kernel_rank=s - wr,
        faithful=(wr == s),
        invariant_factors=inv,
        strictly_faithful=strict,
        assumptions=STANDING_ASSUMPTIONS,
    )


def require_valid(rep: SymplecticRep) -> ValidationReport:
    report = validate(rep)
    if not report.faithful:
        raise NonFaithfulError(report.kernel_rank)
    return report


# ---------------------------------------------------------------------------
# moment-map quadrics


@dataclass(frozen=True)
class MomentQuadric:
    """One coordinate of the quadratic moment map: sum_i c_i x_i y_i - shift."""

    index: int
    coefficients: IntVec
    shift: int | Fraction = 0

    def as_string(self) -> str:
        parts: list[str] = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = f"x{i + 1}*y{i + 1}"
            if not parts:
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
            else:
                sign = "+" if c > 0 else "-"
                mag = abs(c)
                term = mono if mag == 1 else f"{mag}*{mono}"
                parts.append(f"{sign} {term}")
        if self.shift:
            if not parts:
                parts.append(str(-self.shift))
            else:
                sign = "-" if self.shift > 0 else "+"
                parts.append(f"{sign} {abs(self.shift)}")
        return " ".join(parts) if parts else "0"


def moment_quadrics(rep: SymplecticRep, xi: IntVec | None = None) -> tuple[MomentQuadric, ...]:
    """The s quadrics cutting out the fiber of the moment map over xi."""
    s = rep.torus_rank
    if xi is None:
        xi = (0,) * s
    if len(xi) != s:
        raise DimensionError(f"moment value has length {len(xi)}, expected {s}")

    def norm(v):
        f = Fraction(v)
        return int(f) if f.denominator == 1 else f

    return tuple(
        MomentQuadric(
            index=j,
            coefficients=tuple(w[j] for w in rep.half_weights),
            shift=norm(xi[j]),
        )
        for j in range(s)
    )


# ---------------------------------------------------------------------------
# genericity of the weight configuration


def nongeneric_pair(rep: SymplecticRep) -> tuple[IntVec, int] | None:
    """Find a coordinate pair whose deletion drops the weight span rank.

    Returns (normal, i) where the primitive normal annihilates every
    half-weight except beta_i, or None when no such pair exists.
    """
    s = rep.torus_rank
    if s == 0:
        return None
    for i in range(rep.num_pairs):
        others = [w for j, w in enumerate(rep.half_weights) if j != i]
        if (rank(others) if others else 0) <= s - 1:
            kernel = int_kernel_basis(others, s)
            if kernel:
                normal = min(primitive(v) for v in kernel)
                return normal, i
    return None


def is_generic_w(rep: SymplecticRep) -> bool:
    """True when deleting any single coordinate pair keeps the weights spanning."""
    return nongeneric_pair(rep) is None


# ---------------------------------------------------------------------------
# splitting off a non-generic pair


@dataclass(frozen=True)
class ReductionStep:
    """One split: coordinate pair removed_pair separates from the rest.

    normal is oriented so that it pairs to +1 with the removed half-weight.
    projection has s-1 rows; a character chi of the big torus restricts to
    chi' with chi'_k = chi . projection[k].  lift is the inverse change of
    basis: a window point p' of the reduced problem, extended by the fixed
    window_level in the split-off direction, returns to original coordinates
    as the row-vector product (p', window_level) @ lift.
    """

    removed_pair: int
    normal: IntVec
    projection: tuple[IntVec, ...]
    window_level: int
    lift: tuple[IntVec, ...]


@dataclass(frozen=True)
class ReductionResult:
    original: SymplecticRep
    reduced: SymplecticRep
    steps: tuple[ReductionStep, ...]
    chi: IntVec | None = None
    epsilon: IntVec | None = None

    @property
    def is_trivial(self) -> bool:
        return not self.steps

    def lift_point(self, point: IntVec) -> IntVec:
        """Map a window point of the reduced problem to original coordinates."""
        p = tuple(int(x) for x in point)
        if len(p) != self.reduced.torus_rank:
            raise DimensionError(
                f"point has length {len(p)}, expected {self.reduced.torus_rank}"
            )
        for step in reversed(self.steps):
            p = p + (step.window_level,)
            n = len(p)
            p = tuple(sum(p[r] * step.lift[r][c] for r in range(n)) for c in range(n))
        return p

    def lift_window(self, points) -> tuple[IntVec, ...]:
        return tuple(self.lift_point(p) for p in points)


def _project_vec(v: IntVec, projection: tuple[IntVec, ...]) -> IntVec:
    return tuple(dot(v, u) for u in projection)


def reduce_to_generic(
    rep: SymplecticRep,
    chi: IntVec | None = None,
    epsilon: IntVec | None = None,
) -> ReductionResult:
    """Split off non-generic coordinate pairs until the weights are generic.

    Each split needs the half-weights to generate the full character lattice
    (all Smith invariant factors 1); otherwise the split direction cannot be
    made an exact lattice factor and ReductionError is raised.
    """
    report = require_valid(rep)
    steps: list[ReductionStep] = []
    current = rep
    while True:
        found = nongeneric_pair(current)
        if found is None:
            break
        if not validate(current).strictly_faithful:
            raise ReductionError(
                "cannot split off a non-generic pair: the half-weights do not "
                "generate the character lattice "
                f"(invariant factors {validate(current).invariant_factors})"
            )
        normal, i = found
        beta = current.half_weights[i]
        pairing = dot(beta, normal)
        if pairing < 0:
            normal = vec_neg(normal)
            pairing = -pairing
        if pairing != 1:
            raise ReductionError(
                f"split direction pairs to {pairing} with the removed half-weight; "
                "expected 1 for a strictly faithful action"
            )
        s = current.torus_rank
        complement = int_kernel_basis([beta], s)
        if len(complement) != s - 1:
            raise ReductionError("removed half-weight is zero; no split direction")
        # change of basis with columns (complement..., normal); unimodular
        # because the removed half-weight pairs to 1 with the last column
        basis_cols = list(complement) + [normal]
        change = [tuple(basis_cols[c][r] for c in range(s)) for r in range(s)]
        lift = int_inverse(change)
        projection = tuple(complement)
        new_weights = tuple(
            _project_vec(w, projection)
            for j, w in enumerate(current.half_weights)
            if j != i
        )
        steps.append(
            ReductionStep(
                removed_pair=i,
                normal=normal,
                projection=projection,
                window_level=0,
                lift=tuple(lift),
            )
        )
        current = SymplecticRep(s - 1, new_weights)
        if chi is not None:
            chi = _project_vec(chi, projection)
        if epsilon is not None:
            epsilon = _project_vec(epsilon, projection)
    return ReductionResult(
        original=rep,
        reduced=current,
        steps=tuple(steps),
        chi=chi,
        epsilon=epsilon,
    )


# ---------------------------------------------------------------------------
# codimension bound for the locus with nontrivial stabilizer


@dataclass(frozen=True)
class CodimEstimate:
    """Lower bound on the codimension of the non-free locus in the fiber.

    estimate is None when no pair subset produces a degenerate stratum, in
    which case the fiber has no such locus at all.
    """

    estimate: int | None
    fiber_dim: int
    bad_subset: tuple[int, ...] | None
    bad_rank: int | None


def singular_codim_estimate(
    rep: SymplecticRep,
    xi: IntVec | None = None,
    max_pairs: int = 12,
) -> CodimEstimate:
    """Minimize fiber_dim - (2|S| - rank S) over pair subsets S of deficient rank.

    A subset S of coordinate pairs is deficient when its half-weights fail to
    span; the stratum supported exactly on S then meets the fiber over xi in
    dimension at most 2|S| - rank(S), provided xi lies in the span (otherwise
    the stratum misses the fiber and is skipped).
    """
    require_valid(rep)
    e = rep.num_pairs
    s = rep.torus_rank
    if e > max_pairs:
        raise ResourceBudgetError(
            f"codimension estimate enumerates 2^{e} subsets; limit is max_pairs={max_pairs}"
        )
    if xi is None:
        xi = (0,) * s
    if len(xi) != s:
        raise DimensionError(f"moment value has length {len(xi)}, expected {s}")
    fiber_dim = 2 * e - s
    best: tuple[int, tuple[int, ...], int] | None = None
    for size in range(e + 1):
        for subset in combinations(range(e), size):
            vecs = [rep.half_weights[i] for i in subset]
            r = rank(vecs) if vecs else 0
            if r >= s:
                continue
            if any(xi) and rank(vecs + [xi]) != r:
                continue
            codim = fiber_dim - (2 * size - r)
            if best is None or codim < best[0]:
                best = (codim, subset, r)
    if best is None:
        return CodimEstimate(estimate=None, fiber_dim=fiber_dim, bad_subset=None, bad_rank=None)
    return CodimEstimate(
        estimate=best[0],
        fiber_dim=fiber_dim,
        bad_subset=best[1],
        bad_rank=best[2],
    )
