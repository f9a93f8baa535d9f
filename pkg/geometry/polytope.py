"""Exact convex polytopes over the rationals.

A :class:`VPolytope` is always vertex-minimal: it is produced by :func:`hull`,
which also records the facet structure when the hull is full-dimensional.
Facet normals point inward, so a facet with normal ``n`` and offset ``h``
describes ``<n, x> + h >= 0``.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterator, Optional, Sequence

from config import (
    ERROR_DEGENERATE_POLYTOPE,
    ERROR_EMPTY_INPUT,
    ERROR_MIXED_DIMENSIONS,
    ERROR_ORIGIN_NOT_INTERIOR,
)
from errors import DegeneratePolytopeError, DimensionMismatchError, GeometryError
from geometry.convex import facet_enumeration, monotone_chain
from geometry.lattice import (
    LatticeVector,
    Number,
    Vector,
    dot,
    normalize,
    order2,
    rank,
    rational_det,
    row_echelon,
    sub,
    vector_sum,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HalfSpace:
    """The closed halfspace ``<normal, x> + offset >= 0``.

    Attributes:
        normal: Primitive inward-pointing lattice vector.
        offset: Exact rational offset.
    """

    normal: LatticeVector
    offset: Fraction

    def evaluate(self, x: Sequence[Number]) -> Number:
        return dot(self.normal, x) + self.offset

    def contains(self, x: Sequence[Number]) -> bool:
        return self.evaluate(x) >= 0

    def is_tight(self, x: Sequence[Number]) -> bool:
        return self.evaluate(x) == 0


@dataclass(frozen=True)
class Facet:
    """A facet together with the indices of the vertices lying on it."""

    halfspace: HalfSpace
    vertex_indices: tuple[int, ...]


@dataclass(frozen=True)
class FacetStructure:
    """Complete, irredundant facet list of a full-dimensional polytope."""

    facets: tuple[Facet, ...]

    def __iter__(self) -> Iterator[Facet]:
        return iter(self.facets)

    def __len__(self) -> int:
        return len(self.facets)

    def __getitem__(self, index: int) -> Facet:
        return self.facets[index]

    def incident_facets(self, vertex_index: int) -> list[int]:
        """Indices of the facets containing a vertex."""
        return [i for i, f in enumerate(self.facets) if vertex_index in f.vertex_indices]


@dataclass(frozen=True)
class VPolytope:
    """Vertex description of a convex polytope.

    Attributes:
        vertices: Hull vertices; counterclockwise in the plane, lexicographic
            otherwise.
        ambient_dim: Dimension d of the ambient space.
        affine_dim: Dimension of the affine hull of the vertices.
        facet_structure: Facets of a full-dimensional hull, filled in by
            :func:`hull`. Not part of equality.
    """

    vertices: tuple[Vector, ...]
    ambient_dim: int
    affine_dim: int
    facet_structure: Optional[FacetStructure] = field(
        default=None, compare=False, repr=False
    )

    @property
    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.ambient_dim

    @property
    def vertex_set(self) -> frozenset[Vector]:
        return frozenset(self.vertices)

    @property
    def is_lattice(self) -> bool:
        return all(isinstance(x, int) for v in self.vertices for x in v)

    def __len__(self) -> int:
        return len(self.vertices)

    def __neg__(self) -> "VPolytope":
        return hull([tuple(-x for x in v) for v in self.vertices])


def _check_points(points: Sequence[Sequence[Number]]) -> list[Vector]:
    if not points:
        raise GeometryError(ERROR_EMPTY_INPUT)
    unique = list(dict.fromkeys(normalize(p) for p in points))
    d = len(unique[0])
    if d == 0 or any(len(p) != d for p in unique):
        raise DimensionMismatchError(ERROR_MIXED_DIMENSIONS)
    return unique


def hull(points: Sequence[Sequence[Number]]) -> VPolytope:
    """Vertex-minimal convex hull of a finite point set.

    Lower-dimensional inputs are legal; they are projected onto a coordinate
    subspace on which they are full-dimensional and the hull is taken there.

    Args:
        points: Non-empty list of lattice or rational points of one dimension.

    Returns:
        The hull with ``affine_dim`` computed. Full-dimensional hulls carry
        their facet structure.

    Raises:
        GeometryError: If ``points`` is empty.
        DimensionMismatchError: If the points have mixed dimensions.

    Example:
        >>> hull([(1, -1), (-1, -1), (0, -1)]).affine_dim
        1
    """
    pts = _check_points(points)
    d = len(pts[0])
    base = pts[0]
    _, pivots = row_echelon([sub(p, base) for p in pts[1:]])
    r = len(pivots)

    if r == 0:
        return VPolytope((base,), d, 0)
    if r < d:
        projected = [tuple(p[c] for c in pivots) for p in pts]
        lifted = {q: p for q, p in zip(projected, pts)}
        inner = hull(projected)
        logger.debug(f"Hull of {len(pts)} points is {r}-dimensional in R^{d}")
        return VPolytope(tuple(lifted[q] for q in inner.vertices), d, r)

    if d == 1:
        low, high = min(pts), max(pts)
        ends = (
            Facet(HalfSpace((1,), Fraction(-low[0])), (0,)),
            Facet(HalfSpace((-1,), Fraction(high[0])), (1,)),
        )
        return VPolytope((low, high), 1, 1, FacetStructure(ends))

    if d == 2:
        cycle, raw = monotone_chain(pts)
        n = len(cycle)
        # Edge i joins vertex i to vertex i + 1.
        edges = tuple(
            Facet(HalfSpace(normal, offset), (i, (i + 1) % n))
            for i, (normal, offset, _) in enumerate(raw)
        )
        return VPolytope(tuple(cycle), 2, 2, FacetStructure(edges))

    raw = facet_enumeration(pts, d)
    vertices = tuple(sorted(p for i, p in enumerate(pts) if _is_vertex(i, raw, d)))
    index = {v: i for i, v in enumerate(vertices)}
    facet_list = []
    for normal, offset, tight in raw:
        incident = sorted(index[pts[i]] for i in tight if pts[i] in index)
        facet_list.append(Facet(HalfSpace(normal, offset), tuple(incident)))
    facet_list.sort(key=lambda f: f.vertex_indices)
    return VPolytope(vertices, d, d, FacetStructure(tuple(facet_list)))


def _is_vertex(point: int, raw: Sequence[tuple], d: int) -> bool:
    tight_normals = [normal for normal, _, tight in raw if point in tight]
    return len(tight_normals) >= d and rank(tight_normals) == d


def facets(P: VPolytope) -> FacetStructure:
    """Facet structure of a full-dimensional polytope.

    In the plane facet ``i`` is the edge from vertex ``i`` to vertex ``i + 1``
    of the counterclockwise cycle; in higher dimension incident vertex
    indices are listed in increasing order.

    Raises:
        DegeneratePolytopeError: If ``P`` is not full-dimensional.
    """
    if not P.is_full_dimensional:
        raise DegeneratePolytopeError(ERROR_DEGENERATE_POLYTOPE)
    if P.facet_structure is not None:
        return P.facet_structure
    rebuilt = hull(P.vertices)
    position = {v: i for i, v in enumerate(P.vertices)}
    return FacetStructure(
        tuple(
            Facet(
                f.halfspace,
                tuple(position[rebuilt.vertices[i]] for i in f.vertex_indices),
            )
            for f in rebuilt.facet_structure
        )
    )


def contains_origin_interior(P: VPolytope, method: str = "facets") -> bool:
    """Return True if the origin is a strict interior point of ``P``.

    Args:
        P: Any polytope; flat ones never contain the origin in their interior.
        method: ``"facets"`` checks every facet inequality strictly at the
            origin; ``"orders"`` (plane only) checks that consecutive
            counterclockwise vertices have positive order.
    """
    if not P.is_full_dimensional:
        return False
    if method == "orders":
        n = len(P.vertices)
        return all(order2(P.vertices[i], P.vertices[(i + 1) % n]) > 0 for i in range(n))
    return all(f.halfspace.offset > 0 for f in facets(P))


def dual(P: VPolytope) -> VPolytope:
    """The dual polytope ``{u : <u, v> >= -1 for all v in P}``.

    Each facet ``<n, x> + h >= 0`` contributes the dual vertex ``n / h``.

    Raises:
        GeometryError: If the origin is not an interior point of ``P``.

    Example:
        >>> dual(hull([(1, -2), (0, 1), (-1, 1)])).vertex_set == {(-3, -1), (0, -1), (3, 2)}
        True
    """
    if not contains_origin_interior(P):
        raise GeometryError(ERROR_ORIGIN_NOT_INTERIOR)
    points = [
        tuple(Fraction(x) / f.halfspace.offset for x in f.halfspace.normal)
        for f in facets(P)
    ]
    return hull(points)


def triangulation(P: VPolytope, apex: Optional[Sequence[Number]] = None) -> list[tuple[Vector, ...]]:
    """Fan triangulation of a full-dimensional polytope into d-simplices.

    Every facet not containing the apex is triangulated by pulling from its
    first vertex, recursively, and joined to the apex.

    Args:
        P: Full-dimensional polytope.
        apex: Cone point of the fan. Defaults to the origin when it is
            interior and to the first vertex otherwise.
    """
    if not P.is_full_dimensional:
        raise DegeneratePolytopeError(ERROR_DEGENERATE_POLYTOPE)
    if apex is None:
        apex = (0,) * P.ambient_dim if contains_origin_interior(P) else P.vertices[0]
    apex = normalize(apex)
    simplices = []
    for facet in facets(P):
        if facet.halfspace.is_tight(apex):
            continue
        face = [P.vertices[i] for i in facet.vertex_indices]
        for simplex in _pull_triangulation(face):
            simplices.append((apex,) + simplex)
    return simplices


def _pull_triangulation(points: list[Vector]) -> list[tuple[Vector, ...]]:
    base = points[0]
    _, pivots = row_echelon([sub(p, base) for p in points[1:]])
    if len(points) == len(pivots) + 1:
        return [tuple(points)]
    projected = [tuple(p[c] for c in pivots) for p in points]
    lifted = {q: p for q, p in zip(projected, points)}
    inner = hull(projected)
    simplices = []
    for facet in inner.facet_structure:
        if facet.halfspace.is_tight(projected[0]):
            continue
        face = [lifted[inner.vertices[i]] for i in facet.vertex_indices]
        for simplex in _pull_triangulation(face):
            simplices.append((base,) + simplex)
    return simplices


def simplex_volume(simplex: Sequence[Vector]) -> Fraction:
    """Euclidean volume of a d-simplex given by its d + 1 vertices."""
    d = len(simplex) - 1
    edges = [sub(v, simplex[0]) for v in simplex[1:]]
    return abs(rational_det(edges)) / factorial(d)


def volume(P: VPolytope) -> Fraction:
    """Exact Euclidean volume.

    Raises:
        DegeneratePolytopeError: If ``P`` is not full-dimensional.
    """
    return sum((simplex_volume(s) for s in triangulation(P)), Fraction(0))


def centroid(P: VPolytope, apex: Optional[Sequence[Number]] = None) -> Vector:
    """Exact volume-weighted barycenter.

    The result does not depend on ``apex``; the argument only selects the
    triangulation used to compute it.

    Raises:
        DegeneratePolytopeError: If ``P`` is not full-dimensional.

    Example:
        >>> centroid(hull([(1, 1), (-1, 1), (-1, -1), (1, -1)]))
        (0, 0)
    """
    d = P.ambient_dim
    total = Fraction(0)
    moment: Vector = (Fraction(0),) * d
    for simplex in triangulation(P, apex):
        weight = simplex_volume(simplex)
        if weight == 0:
            continue
        mean = vector_sum(simplex, d)
        moment = tuple(m + weight * x / (d + 1) for m, x in zip(moment, mean))
        total += weight
    return normalize(tuple(m / total for m in moment))
