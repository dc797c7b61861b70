"""Brute-force reference implementations, deliberately simple and slow.

Everything here is recomputed from first principles: membership in the
weight zonotope is decided by exact feasibility of the defining cube system
(projected once by Fourier-Motzkin elimination with the point kept
symbolic), tilted membership by testing the concretely shifted point
x - r*epsilon at a certified radius, and block dimensions by dense row
reduction over Fractions.  No code is shared with the engine beyond scalar
types and the representation container.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd

from .errors import DimensionError, ResourceBudgetError
from .lattice import IntVec
from .reps import SymplecticRep


@dataclass(frozen=True)
class OracleBudget:
    """Hard limits; the oracle refuses anything beyond them."""

    max_rank: int = 3
    max_pairs: int = 5
    max_degree: int = 8
    max_radius: int = 16
    max_rows: int = 50000

    def __post_init__(self):
        for name in ("max_rank", "max_pairs", "max_degree", "max_radius", "max_rows"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


DEFAULT_BUDGET = OracleBudget()


def _check_rep(rep: SymplecticRep, budget: OracleBudget):
    if rep.torus_rank > budget.max_rank:
        raise ResourceBudgetError(
            f"oracle limit: torus rank {rep.torus_rank} > {budget.max_rank}"
        )
    if rep.num_pairs > budget.max_pairs:
        raise ResourceBudgetError(
            f"oracle limit: {rep.num_pairs} coordinate pairs > {budget.max_pairs}"
        )


# ---------------------------------------------------------------------------
# zonotope membership by projection of the cube system
#
# x lies in the zonotope iff the system  sum_i a_i w_i = x,  a in [-1, 0]^(2e)
# over all 2e weights w_i is feasible.  Rows are pairs (coeffs on a, affine
# form in x): coeffs . a <= b_0 + sum_k b_k x_k, all integer.

_Row = tuple[tuple[int, ...], tuple[int, ...]]


def _norm_row(a: tuple[int, ...], b: tuple[int, ...]) -> _Row:
    g = 0
    for v in a + b:
        g = gcd(g, abs(v))
    if g > 1:
        a = tuple(v // g for v in a)
        b = tuple(v // g for v in b)
    return a, b


def _is_trivial(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return not any(a) and not any(b[1:]) and b[0] >= 0


@lru_cache(maxsize=None)
def _zonotope_conditions(rep: SymplecticRep, budget: OracleBudget
                         ) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Affine conditions 0 <= b_0 + b . x equivalent to zonotope membership."""
    s = rep.torus_rank
    weights = rep.weights
    nv = len(weights)
    rows: set[_Row] = set()

    def unit(i: int, sign: int) -> tuple[int, ...]:
        return tuple(sign if j == i else 0 for j in range(nv))

    zero_b = (0,) * (s + 1)
    for i in range(nv):
        rows.add((unit(i, 1), zero_b))  # a_i <= 0
        rows.add((unit(i, -1), (1,) + (0,) * s))  # -a_i <= 1
    for k in range(s):
        coeffs = tuple(w[k] for w in weights)
        bpos = tuple(1 if j == k + 1 else 0 for j in range(s + 1))
        bneg = tuple(-1 if j == k + 1 else 0 for j in range(s + 1))
        rows.add(_norm_row(coeffs, bpos))
        rows.add(_norm_row(tuple(-c for c in coeffs), bneg))

    for j in range(nv):
        pos = [r for r in rows if r[0][j] > 0]
        neg = [r for r in rows if r[0][j] < 0]
        keep = {r for r in rows if r[0][j] == 0}
        for (pa, pb) in pos:
            for (na, nb) in neg:
                cp, cn = -na[j], pa[j]
                a = tuple(cp * x + cn * y for x, y in zip(pa, na))
                b = tuple(cp * x + cn * y for x, y in zip(pb, nb))
                a, b = _norm_row(a, b)
                if not _is_trivial(a, b):
                    keep.add((a, b))
            if len(keep) > budget.max_rows:
                raise ResourceBudgetError(
                    f"projection produced more than {budget.max_rows} rows"
                )
        rows = keep
    return tuple(sorted((b[0], b[1:]) for a, b in rows))


def _certified_radius(conditions, epsilon: IntVec) -> Fraction:
    """A shift radius below every scale at which any condition can flip.

    Conditions are integer, so at an integer point each value is 0 or at
    least 1 in absolute value; a shift by r*epsilon moves a value by at most
    r * |b . epsilon|.
    """
    worst = 1
    for _, b in conditions:
        pairing = abs(sum(x * y for x, y in zip(b, epsilon)))
        worst = max(worst, pairing + 1)
    return Fraction(1, worst)


def oracle_lattice_points(
    rep: SymplecticRep,
    epsilon: IntVec,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> set[IntVec]:
    """Reference enumeration of the tilted half-zonotope lattice points."""
    _check_rep(rep, budget)
    s = rep.torus_rank
    if len(epsilon) != s:
        raise DimensionError(f"tilt has length {len(epsilon)}, expected {s}")
    conditions = _zonotope_conditions(rep, budget)
    r = _certified_radius(conditions, epsilon)
    bounds = [sum(abs(w[k]) for w in rep.half_weights) // 2 for k in range(s)]
    for bnd in bounds:
        if bnd > budget.max_radius:
            raise ResourceBudgetError(
                f"bounding box radius {bnd} exceeds {budget.max_radius}"
            )
    points: set[IntVec] = set()
    for p in product(*(range(-b, b + 1) for b in bounds)):
        shifted = [2 * c - r * eps for c, eps in zip(p, epsilon)]
        ok = True
        for b0, b in conditions:
            if b0 + sum(x * y for x, y in zip(b, shifted)) < 0:
                ok = False
                break
        if ok:
            points.add(p)
    return points


# ---------------------------------------------------------------------------
# block dimensions by explicit monomial enumeration and row reduction


def _exponent_vectors(n: int, k: int):
    if k == 0:
        if n == 0:
            yield ()
        return
    for last in range(n + 1):
        for head in _exponent_vectors(n - last, k - 1):
            yield head + (last,)


def _monomial_weight(rep: SymplecticRep, mono: tuple[int, ...]) -> IntVec:
    e = rep.num_pairs
    acc = [0] * rep.torus_rank
    for i in range(e):
        c = mono[i] - mono[e + i]
        if c:
            for k, b in enumerate(rep.half_weights[i]):
                acc[k] += c * b
    return tuple(acc)


def _dense_rank(rows: list[list[Fraction]]) -> int:
    if not rows:
        return 0
    mat = [row[:] for row in rows]
    ncols = len(mat[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return r


def oracle_block_dimension(
    rep: SymplecticRep,
    mu: IntVec,
    mu_prime: IntVec,
    n: int,
    with_quadrics: bool,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> int:
    """Dimension of the degree-n block between two window characters.

    Counts monomials of weight mu_prime - mu; in quotient mode the span of
    all moment-quadric multiples is removed by dense row reduction.
    """
    _check_rep(rep, budget)
    if n > budget.max_degree:
        raise ResourceBudgetError(f"oracle limit: degree {n} > {budget.max_degree}")
    if n < 0:
        return 0
    s = rep.torus_rank
    if len(mu) != s or len(mu_prime) != s:
        raise DimensionError("window characters must match the torus rank")
    w = tuple(b - a for a, b in zip(mu, mu_prime))
    e = rep.num_pairs
    mons = [m for m in _exponent_vectors(n, 2 * e) if _monomial_weight(rep, m) == w]
    if not with_quadrics:
        return len(mons)
    index = {m: c for c, m in enumerate(mons)}
    rows: list[list[Fraction]] = []
    for base in _exponent_vectors(n - 2, 2 * e):
        if _monomial_weight(rep, base) != w:
            continue
        for j in range(s):
            row = [Fraction(0)] * len(mons)
            for i in range(e):
                c = rep.half_weights[i][j]
                if c == 0:
                    continue
                prod = list(base)
                prod[i] += 1
                prod[e + i] += 1
                row[index[tuple(prod)]] += c
            if any(row):
                rows.append(row)
    return len(mons) - _dense_rank(rows)
