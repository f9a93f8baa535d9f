"""Exact convex hull kernels.

The plane kernel is Andrew's monotone chain; higher dimensions go through
pycddlib. Both take deduplicated, full-dimensional point lists and return the
hull vertices together with raw facet data ``(normal, offset, tight point
indices)``, where ``normal`` is a primitive integer vector pointing into the
polytope and ``<normal, x> + offset >= 0`` holds on every input point.
"""

import logging
from fractions import Fraction
from typing import Sequence

import cdd

from errors import DimensionMismatchError
from geometry.lattice import Vector, dot, integral_direction, sub

logger = logging.getLogger(__name__)

RawFacet = tuple[tuple[int, ...], Fraction, frozenset[int]]


def _cross(o: Vector, a: Vector, b: Vector) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def monotone_chain(points: Sequence[Vector]) -> tuple[list[Vector], list[RawFacet]]:
    """Counterclockwise hull of plane points (Andrew's monotone chain).

    Collinear boundary points are dropped. The cycle starts at the
    lexicographically smallest vertex.
    """
    ordered = sorted(points)
    lower: list[Vector] = []
    for p in ordered:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Vector] = []
    for p in reversed(ordered):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    cycle = lower[:-1] + upper[:-1]

    position = {p: i for i, p in enumerate(points)}
    facets: list[RawFacet] = []
    for i, a in enumerate(cycle):
        b = cycle[(i + 1) % len(cycle)]
        edge = sub(b, a)
        normal = integral_direction((-edge[1], edge[0]))
        offset = -Fraction(dot(normal, a))
        facets.append((normal, offset, frozenset((position[a], position[b]))))
    return cycle, facets


def facet_enumeration(points: Sequence[Vector], dim: int) -> list[RawFacet]:
    """Facets of the hull of full-dimensional points in any dimension.

    The points go to cddlib as generator rows ``(1, p)`` in exact rational
    arithmetic. Each returned inequality ``b + <a, x> >= 0`` is rescaled so that
    ``a`` is a primitive integer vector, and its tight set is the cddlib
    incidence of that row.
    """
    generators = cdd.Matrix(
        [[1] + [Fraction(x) for x in p] for p in points], number_type="fraction"
    )
    generators.rep_type = cdd.RepType.GENERATOR
    polyhedron = cdd.Polyhedron(generators)
    inequalities = polyhedron.get_inequalities()
    incidence = polyhedron.get_incidence()

    facets: list[RawFacet] = []
    for i in range(inequalities.row_size):
        row = [Fraction(x) for x in inequalities[i]]
        offset, normal = row[0], row[1 : dim + 1]
        if not any(normal):
            continue
        if i in inequalities.lin_set:
            raise DimensionMismatchError(f"points span less than dimension {dim}")
        direction = integral_direction(normal)
        j = next(k for k, x in enumerate(direction) if x)
        scale = normal[j] / direction[j]
        facets.append((direction, offset / scale, frozenset(incidence[i])))
    logger.debug(f"cddlib: {len(facets)} facets from {len(points)} points")
    return facets
