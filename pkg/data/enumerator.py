"""Brute-force enumeration of Fano polygons with vertices in a box.

Candidate vertices are the primitive lattice points of ``[-B, B]^2`` in
counterclockwise angular order. A depth-first search grows vertex chains in
that order, keeping only strict left turns and edges whose line passes
strictly on the far side of the origin, so every completed chain is a convex
polygon with the origin in its interior and all chosen points as vertices.
Each vertex set is produced exactly once; equivalent copies are left to the
census deduplication.
"""

import logging
from functools import cmp_to_key
from math import gcd, lcm
from typing import Iterator, Optional

from config import DEFAULT_ENUMERATION_BOX, DEFAULT_ENUMERATION_MAX_VERTICES
from geometry.lattice import LatticeVector, order2, primitive_index
from data.formats import content_id
from data.records import PolytopeRecord

logger = logging.getLogger(__name__)


def _half(p: LatticeVector) -> int:
    return 0 if p[1] > 0 or (p[1] == 0 and p[0] > 0) else 1


def _compare_angle(p: LatticeVector, q: LatticeVector) -> int:
    if _half(p) != _half(q):
        return _half(p) - _half(q)
    return -1 if order2(p, q) > 0 else 1


def primitive_points(box: int) -> list[LatticeVector]:
    """Primitive lattice points of ``[-box, box]^2`` sorted by angle from the positive x-axis."""
    points = [
        (x, y)
        for x in range(-box, box + 1)
        for y in range(-box, box + 1)
        if gcd(x, y) == 1
    ]
    return sorted(points, key=cmp_to_key(_compare_angle))


def edge_height(u: LatticeVector, v: LatticeVector) -> int:
    """Lattice distance from the origin to the line through ``u`` and ``v``."""
    return order2(u, v) // primitive_index((v[0] - u[0], v[1] - u[1]))


def _left_turn(a: LatticeVector, b: LatticeVector, c: LatticeVector) -> bool:
    return (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]) > 0


def enumerate_fano_polygons(
    coordinate_box: int = DEFAULT_ENUMERATION_BOX,
    max_vertices: int = DEFAULT_ENUMERATION_MAX_VERTICES,
    index_filter: Optional[int] = None,
) -> Iterator[PolytopeRecord]:
    """Yield every Fano polygon with vertices in the box.

    Args:
        coordinate_box: Vertex coordinates lie in ``[-B, B]``.
        max_vertices: Largest vertex count to produce (at least 3).
        index_filter: Keep only polygons of this Gorenstein index.

    Yields:
        Records tagged ``source=enumerator``, vertices in counterclockwise
        order starting at the smallest angle.

    Raises:
        ValueError: If ``coordinate_box < 1`` or ``max_vertices < 3``.
    """
    if coordinate_box < 1 or max_vertices < 3:
        raise ValueError(
            f"need coordinate_box >= 1 and max_vertices >= 3, got {coordinate_box}, {max_vertices}"
        )
    points = primitive_points(coordinate_box)
    tags = {"source": "enumerator", "box": str(coordinate_box)}

    def edge_allowed(u: LatticeVector, v: LatticeVector) -> bool:
        if order2(u, v) <= 0:
            return False
        return index_filter is None or index_filter % edge_height(u, v) == 0

    def closes(chain: list[LatticeVector]) -> bool:
        first, last = chain[0], chain[-1]
        if not (edge_allowed(last, first) and _left_turn(chain[-2], last, first)):
            return False
        if not _left_turn(last, first, chain[1]):
            return False
        if index_filter is None:
            return True
        heights = [edge_height(chain[i], chain[(i + 1) % len(chain)]) for i in range(len(chain))]
        return lcm(*heights) == index_filter

    def extend(chain: list[LatticeVector], start: int) -> Iterator[list[LatticeVector]]:
        if len(chain) >= 3 and closes(chain):
            yield chain
        if len(chain) == max_vertices:
            return
        for j in range(start, len(points)):
            w = points[j]
            if not edge_allowed(chain[-1], w):
                continue
            if len(chain) >= 2 and not _left_turn(chain[-2], chain[-1], w):
                continue
            yield from extend(chain + [w], j + 1)

    count = 0
    for i, first in enumerate(points):
        for chain in extend([first], i + 1):
            count += 1
            yield PolytopeRecord(id=content_id(chain), vertices=chain, tags=tags)
    logger.info(f"Enumerated {count} Fano polygons in box {coordinate_box}")
