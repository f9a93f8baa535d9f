"""Fano polytopes, face-fan cone barycenters and the B-transformation.

A Fano polytope is a full-dimensional lattice polytope whose vertices are
primitive and which has the origin as an interior point. Its B-transform is
the convex hull of the barycenters of the maximal cones of its face fan; it is
again a lattice polytope but need not be Fano, so the checked variant
:func:`b_transform_fano` returns a :class:`config.FailureReason` instead of
raising.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence, Union

from config import ERROR_CONE_BARYCENTER_UNDEFINED, ERROR_DEGENERATE_POLYTOPE, FailureReason
from errors import ConeBarycenterError, DegeneratePolytopeError, UnsupportedDimensionError
from geometry.lattice import (
    LatticeVector,
    Number,
    det_n,
    is_primitive,
    order2,
    primitive_index,
    primitivize,
    vector_sum,
)
from geometry.polytope import (
    FacetStructure,
    VPolytope,
    centroid,
    contains_origin_interior,
    dual,
    facets,
    hull,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FanoPolytope:
    """A validated Fano polytope.

    Attributes:
        polytope: Full-dimensional hull with primitive lattice vertices and the
            origin in its interior.
    """

    polytope: VPolytope

    @property
    def dim(self) -> int:
        return self.polytope.ambient_dim

    @property
    def vertices(self) -> tuple[LatticeVector, ...]:
        return self.polytope.vertices

    @property
    def facets(self) -> FacetStructure:
        return facets(self.polytope)

    def __len__(self) -> int:
        return len(self.polytope)


FanoResult = Union[FanoPolytope, FailureReason]


@dataclass(frozen=True)
class MaximalCone:
    """Cone over one facet of a Fano polytope, spanned by the facet's vertices."""

    generators: tuple[LatticeVector, ...]


@dataclass(frozen=True)
class ConeBarycenter:
    """Raw generator sum of a maximal cone and its primitive direction."""

    raw_sum: LatticeVector
    point: LatticeVector


def validate_fano(points: Sequence[Sequence[Number]]) -> FanoResult:
    """Hull the points and check the Fano conditions.

    Args:
        points: Candidate vertices (extra interior points are allowed).

    Returns:
        The :class:`FanoPolytope`, or the first failed condition in the order
        dimension, origin, primitivity.

    Example:
        >>> validate_fano([(1, 0), (-1, 1), (1, -1)])
        <FailureReason.ORIGIN_NOT_INTERIOR: 'OriginNotInterior'>
    """
    P = hull(points)
    if not P.is_full_dimensional:
        return FailureReason.DIMENSION_DROP
    if not contains_origin_interior(P):
        return FailureReason.ORIGIN_NOT_INTERIOR
    if not all(is_primitive(v) for v in P.vertices):
        return FailureReason.NON_PRIMITIVE_VERTEX
    return FanoPolytope(P)


def face_fan_cones(P: FanoPolytope) -> list[MaximalCone]:
    """One maximal cone per facet, in facet order."""
    return [
        MaximalCone(tuple(P.vertices[i] for i in facet.vertex_indices))
        for facet in P.facets
    ]


def cone_barycenter_detail(cone: MaximalCone) -> ConeBarycenter:
    """Raw sum and primitivized sum of a cone's generators.

    Raises:
        ConeBarycenterError: If the generators sum to zero.
    """
    raw = vector_sum(cone.generators, len(cone.generators[0]))
    if primitive_index(raw) == 0:
        raise ConeBarycenterError(ERROR_CONE_BARYCENTER_UNDEFINED)
    return ConeBarycenter(raw, primitivize(raw))


def cone_barycenter(cone: MaximalCone) -> LatticeVector:
    """Primitive lattice point on the ray through the generator sum.

    Example:
        >>> cone_barycenter(MaximalCone(((25, 14), (-25, -12))))
        (0, 1)
    """
    return cone_barycenter_detail(cone).point


def b_transform(P: FanoPolytope) -> VPolytope:
    """Convex hull of all maximal-cone barycenters of the face fan."""
    return hull([cone_barycenter(c) for c in face_fan_cones(P)])


def b_transform_fano(P: FanoPolytope) -> FanoResult:
    """B-transform followed by :func:`validate_fano`."""
    return validate_fano(b_transform(P).vertices)


def is_kahler_einstein(P: FanoPolytope) -> bool:
    """True if the dual polytope has its barycenter exactly at the origin."""
    return all(x == 0 for x in centroid(dual(P.polytope)))


def has_zero_barycenter(P: FanoPolytope) -> bool:
    """True if the polytope itself has its barycenter at the origin."""
    return all(x == 0 for x in centroid(P.polytope))


def gorenstein_index(P: FanoPolytope) -> int:
    """Least positive integer ``l`` such that ``l`` times the dual is a lattice polytope.

    Example:
        >>> gorenstein_index(validate_fano([(1, 0), (0, 1), (-1, -1)]))
        1
    """
    return lcm(*(Fraction(x).denominator for w in dual(P.polytope).vertices for x in w))


def is_smooth(P: FanoPolytope) -> bool:
    """True if every facet's vertices form a lattice basis."""
    d = P.dim
    for facet in P.facets:
        if len(facet.vertex_indices) != d:
            return False
        if abs(det_n([P.vertices[i] for i in facet.vertex_indices])) != 1:
            return False
    return True


def is_b_invariant(P: FanoPolytope) -> bool:
    """True if the B-transform has exactly the vertex set of ``P``."""
    return b_transform(P).vertex_set == P.polytope.vertex_set


def _require_plane(P: Union[FanoPolytope, VPolytope], operation: str) -> None:
    dim = P.dim if isinstance(P, FanoPolytope) else P.ambient_dim
    if dim != 2:
        raise UnsupportedDimensionError(f"{operation} is only defined for polygons, got d={dim}")


def orders(P: Union[FanoPolytope, VPolytope]) -> list[Number]:
    """``ord(v_i, v_{i+1})`` around the counterclockwise vertex cycle."""
    _require_plane(P, "orders")
    v = P.vertices
    n = len(v)
    return [order2(v[i], v[(i + 1) % n]) for i in range(n)]


def g_values(P: FanoPolytope) -> list[Number]:
    """The quantities ``ord(v_{i-1}, v_i) + ord(v_i, v_{i+1}) - ord(v_{i+1}, v_{i-1})``.

    ``g(i)`` is the order between the two barycenters adjacent to vertex ``i``
    before primitivization.
    """
    _require_plane(P, "g_values")
    v = P.vertices
    n = len(v)
    return [
        order2(v[i - 1], v[i])
        + order2(v[i], v[(i + 1) % n])
        - order2(v[(i + 1) % n], v[i - 1])
        for i in range(n)
    ]


def cond_b1(P: FanoPolytope) -> bool:
    """Sufficient condition for the B-transform of a polygon to be Fano."""
    return all(g > 0 for g in g_values(P))


def formal_b_transform(points: Sequence[Sequence[Number]]) -> VPolytope:
    """Polygon B-transform formula applied to any lattice polygon.

    Consecutive counterclockwise vertices ``v_i, v_{i+1}`` contribute the
    primitive point on the ray through ``v_i + v_{i+1}``; no Fano condition is
    required, so iterates can be followed past a failure.

    Raises:
        DegeneratePolytopeError: If the hull is not a polygon.
        ConeBarycenterError: If two consecutive vertices sum to zero.
    """
    P = hull(points)
    _require_plane(P, "formal_b_transform")
    if not P.is_full_dimensional:
        raise DegeneratePolytopeError(ERROR_DEGENERATE_POLYTOPE)
    v = P.vertices
    n = len(v)
    return hull(
        [cone_barycenter(MaximalCone((v[i], v[(i + 1) % n]))) for i in range(n)]
    )


def formal_orbit(P: Union[FanoPolytope, VPolytope], steps: int) -> list[VPolytope]:
    """``P`` and up to ``steps`` formal B-transforms of it.

    Stops early after a dimension drop or an undefined barycenter.
    """
    current = P.polytope if isinstance(P, FanoPolytope) else P
    orbit = [current]
    for step in range(steps):
        try:
            current = formal_b_transform(current.vertices)
        except (DegeneratePolytopeError, ConeBarycenterError) as e:
            logger.debug(f"Formal orbit stops at step {step + 1}: {e}")
            break
        orbit.append(current)
        if not current.is_full_dimensional:
            break
    return orbit
