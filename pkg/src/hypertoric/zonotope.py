"""Weight zonotopes, facet data, and directed lattice-point windows.

The zonotope of a symplectic representation is the set of sums c_i beta_i
with every c_i in [-1, 1].  Its facets sit on translates of the hyperplanes
spanned by rank-(s-1) subsets of the half-weights, and the directed window
keeps the lattice points whose doubles stay inside even after an
infinitesimal push along a chosen tilt direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import DegenerateZonotopeError, DimensionError, NonGenericError
from .lattice import IntVec, dot, hyperplane_normals, vec_neg
from .reps import SymplecticRep, validate


@dataclass(frozen=True)
class Facet:
    normal: IntVec
    offset: int


@dataclass(frozen=True)
class Zonotope:
    """Full-dimensional weight zonotope with its facet description."""

    dimension: int
    half_generators: tuple[IntVec, ...]
    flat_normals: tuple[IntVec, ...]
    facets: tuple[Facet, ...]

    @property
    def generators(self) -> tuple[IntVec, ...]:
        return self.half_generators + tuple(vec_neg(w) for w in self.half_generators)

    def support(self, normal: IntVec) -> int:
        """Largest value of normal . x over the zonotope."""
        return sum(abs(dot(normal, w)) for w in self.half_generators)

    def contains(self, x) -> bool:
        if len(x) != self.dimension:
            raise DimensionError(f"point has length {len(x)}, expected {self.dimension}")
        return all(dot(f.normal, x) <= f.offset for f in self.facets)

    def active_facets(self, x) -> tuple[Facet, ...]:
        """Facets whose bounding hyperplane passes through x (x need not be inside)."""
        return tuple(f for f in self.facets if dot(f.normal, x) == f.offset)

    def generic_witness(self, v: IntVec) -> IntVec | None:
        """A facet-hyperplane normal annihilating v, or None when v avoids them all."""
        if len(v) != self.dimension:
            raise DimensionError(f"vector has length {len(v)}, expected {self.dimension}")
        for n in self.flat_normals:
            if dot(n, v) == 0:
                return n
        return None

    def is_generic(self, v: IntVec) -> bool:
        return self.generic_witness(v) is None

    def perturbed_contains(self, x, epsilon: IntVec, *, check: bool = True) -> bool:
        """Membership after an infinitesimal shift of the body along epsilon.

        A point survives the shift when it is inside and every facet it
        touches moves away from it, i.e. the facet normal pairs positively
        with epsilon.
        """
        if check:
            witness = self.generic_witness(epsilon)
            if witness is not None:
                raise NonGenericError("tilt direction", witness)
        if not self.contains(x):
            return False
        return all(dot(f.normal, epsilon) > 0 for f in self.active_facets(x))


def build_zonotope(rep: SymplecticRep) -> Zonotope:
    """Facet description of the weight zonotope; requires full-dimensional weights."""
    report = validate(rep)
    s = rep.torus_rank
    if report.weight_rank < s:
        raise DegenerateZonotopeError(
            f"half-weights span rank {report.weight_rank} < {s}; "
            "the zonotope is not full-dimensional"
        )
    if s == 0:
        return Zonotope(0, rep.half_weights, (), ())
    if s == 1:
        normals: tuple[IntVec, ...] = ((1,),)
    else:
        normals = tuple(hyperplane_normals(rep.half_weights, s))
    facets = []
    for n in normals:
        c = sum(abs(dot(n, w)) for w in rep.half_weights)
        facets.append(Facet(n, c))
        facets.append(Facet(vec_neg(n), c))
    facets.sort(key=lambda f: f.normal)
    return Zonotope(s, rep.half_weights, normals, tuple(facets))


@dataclass(frozen=True)
class CharacterWindow:
    """Lattice points p with 2p inside the tilted zonotope, in lex order."""

    epsilon: IntVec
    points: tuple[IntVec, ...]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def index(self, point: IntVec) -> int:
        return self.points.index(tuple(point))


def enumerate_window(zono: Zonotope, epsilon: IntVec) -> CharacterWindow:
    """All lattice points p with 2p in the epsilon-tilted zonotope.

    The tilt direction must avoid every facet hyperplane; otherwise the
    membership test is ambiguous and NonGenericError is raised.
    """
    epsilon = tuple(int(x) for x in epsilon)
    witness = zono.generic_witness(epsilon)
    if witness is not None:
        raise NonGenericError("tilt direction", witness)
    s = zono.dimension
    # doubled points lie in the bounding box sum |beta_ik|, so p_k is at
    # most half that
    bounds = [
        sum(abs(w[k]) for w in zono.half_generators) // 2 for k in range(s)
    ]
    points = []
    for p in product(*(range(-b, b + 1) for b in bounds)):
        doubled = tuple(2 * c for c in p)
        if zono.perturbed_contains(doubled, epsilon, check=False):
            points.append(p)
    return CharacterWindow(epsilon=epsilon, points=tuple(points))


def find_generic_direction(zono: Zonotope) -> IntVec:
    """Deterministic generic tilt: smallest max-norm, then lexicographic."""
    s = zono.dimension
    if s == 0:
        return ()
    radius = 1
    while True:
        for v in product(range(-radius, radius + 1), repeat=s):
            if max(abs(c) for c in v) != radius:
                continue
            if zono.generic_witness(v) is None:
                return v
        radius += 1
