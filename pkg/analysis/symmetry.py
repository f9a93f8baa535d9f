"""Lattice automorphism groups of Fano polytopes.

An automorphism is a unimodular map permuting the vertex set. Fixing a
linearly independent vertex tuple ``B0``, every automorphism is determined by
the image tuple ``T``, so the group is found by solving ``U B0 = T`` for each
candidate ``T`` and keeping the integral, unimodular, vertex-permuting
solutions. Candidates are pruned by a facet-incidence invariant of each
vertex, which every automorphism preserves.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from errors import UnsupportedDimensionError
from geometry.lattice import (
    LatticeVector,
    UnimodularMap,
    apply_map,
    det_n,
    inverse,
    mat_mul,
    rank,
    transpose,
)
from analysis.fano import FanoPolytope

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AutomorphismGroup:
    """Finite group of unimodular maps preserving a vertex set."""

    elements: tuple[UnimodularMap, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[UnimodularMap]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: object) -> bool:
        return item in self.elements

    def is_closed(self) -> bool:
        """Check closure under composition and inverses."""
        members = set(self.elements)
        return all(u.compose(v) in members for u in self.elements for v in self.elements) and all(
            u.inverse() in members for u in self.elements
        )


def vertex_signature(P: FanoPolytope, index: int) -> tuple:
    """Sorted (size, height) pairs of the facets through a vertex."""
    return tuple(
        sorted(
            (len(f.vertex_indices), f.halfspace.offset)
            for f in P.facets
            if index in f.vertex_indices
        )
    )


def _independent_tuple(vertices: tuple[LatticeVector, ...], d: int) -> list[int]:
    chosen: list[int] = []
    for i, v in enumerate(vertices):
        if rank([vertices[j] for j in chosen] + [v]) > len(chosen):
            chosen.append(i)
            if len(chosen) == d:
                break
    return chosen


@lru_cache(maxsize=4096)
def automorphisms(P: FanoPolytope) -> AutomorphismGroup:
    """All unimodular maps permuting the vertices of ``P``.

    Example:
        >>> from analysis.families import s_mn
        >>> automorphisms(s_mn(0, 0)).order
        8
    """
    d = P.dim
    vertices = P.vertices
    vertex_set = frozenset(vertices)
    signatures = [vertex_signature(P, i) for i in range(len(vertices))]

    base = _independent_tuple(vertices, d)
    base_inverse = inverse(transpose([vertices[i] for i in base]))
    candidates = [
        [j for j in range(len(vertices)) if signatures[j] == signatures[i]] for i in base
    ]

    found: list[UnimodularMap] = []
    for images in product(*candidates):
        if len(set(images)) < d:
            continue
        target = transpose([vertices[j] for j in images])
        solution = mat_mul(target, base_inverse)
        if any(x.denominator != 1 for row in solution for x in row):
            continue
        matrix = tuple(tuple(int(x) for x in row) for row in solution)
        if abs(det_n(matrix)) != 1:
            continue
        u = UnimodularMap(matrix)
        if frozenset(apply_map(u, v) for v in vertices) == vertex_set:
            found.append(u)

    found.sort(key=lambda u: u.matrix)
    logger.debug(f"Automorphism group of order {len(found)} for {len(vertices)} vertices")
    return AutomorphismGroup(tuple(found))


def is_symmetric(P: FanoPolytope) -> bool:
    """True if the origin is the only point fixed by every automorphism.

    Equivalently, the stacked blocks ``U - I`` over the group have full rank.
    """
    d = P.dim
    rows = [
        [u.matrix[i][j] - int(i == j) for j in range(d)]
        for u in automorphisms(P)
        for i in range(d)
    ]
    return rank(rows) == d


def has_nontrivial_rotation(P: FanoPolytope) -> bool:
    """True if a polygon has an automorphism of determinant +1 other than the identity.

    Raises:
        UnsupportedDimensionError: If ``P`` is not a polygon.
    """
    if P.dim != 2:
        raise UnsupportedDimensionError(f"rotations are only classified for polygons, got d={P.dim}")
    return any(u.determinant == 1 and not u.is_identity() for u in automorphisms(P))
