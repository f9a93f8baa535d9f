"""Canonical keys for Fano polytopes up to unimodular equivalence.

The vertex matrix (vertices as rows) of a polytope is brought into Hermite
normal form after ordering its rows as ``[rest | basis]``, where the basis
runs over every ordered, linearly independent d-tuple of vertices on a facet
of minimal (vertex count, height) signature. Unimodular maps carry such facets
to each other, and the Hermite normal form absorbs the map itself, so the
lexicographically smallest result depends only on the equivalence class.
"""

import logging
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from sympy.polys.domains import ZZ
from sympy.polys.matrices.normalforms import hermite_normal_form as _sympy_hnf

from geometry.lattice import det_n, domain_matrix
from analysis.fano import FanoPolytope

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Serialized canonical vertex matrix; equal keys mean equivalent polytopes."""

    data: bytes

    @classmethod
    def from_hex(cls, text: str) -> "CanonicalKey":
        return cls(bytes.fromhex(text))

    def hex(self) -> str:
        return self.data.hex()

    def __str__(self) -> str:
        return self.data.decode("ascii")


def hermite_normal_form(matrix: Sequence[Sequence[int]]) -> list[list[int]]:
    """Hermite normal form under right multiplication by a unimodular matrix.

    This is sympy's column-style form. Rows are processed from the bottom, so
    when the last ``d`` rows of an ``n x d`` matrix are independent they alone
    fix the transformation: those rows come out upper triangular with positive
    diagonal, and each entry to the right of a pivot lies in ``[0, pivot)``.

    Example:
        >>> hermite_normal_form([[2, 4], [3, 5]])
        [[2, 0], [0, 1]]
    """
    reduced = _sympy_hnf(domain_matrix(matrix, ZZ))
    return [[int(x) for x in row] for row in reduced.to_list()]


def candidate_bases(P: FanoPolytope) -> list[tuple[int, ...]]:
    """Ordered independent vertex d-tuples on the facets of minimal signature."""
    d = P.dim
    signatures = [(len(f.vertex_indices), f.halfspace.offset) for f in P.facets]
    smallest = min(signatures)
    bases = []
    for facet, signature in zip(P.facets, signatures):
        if signature != smallest:
            continue
        for chosen in permutations(facet.vertex_indices, d):
            if det_n([P.vertices[i] for i in chosen]) != 0:
                bases.append(chosen)
    return bases


def normal_form(P: FanoPolytope) -> tuple[tuple[int, ...], ...]:
    """Canonical vertex matrix, returned as a tuple of transformed vertices.

    The basis vertices go last so that they alone determine the coordinate
    change; the remaining vertices are sorted after it is applied.
    """
    d = P.dim
    n = len(P.vertices)
    best = None
    for basis in candidate_bases(P):
        chosen = set(basis)
        order = [i for i in range(n) if i not in chosen] + list(basis)
        reduced = [tuple(row) for row in hermite_normal_form([P.vertices[i] for i in order])]
        form = tuple(reduced[n - d :]) + tuple(sorted(reduced[: n - d]))
        if best is None or form < best:
            best = form
    return best


def canonical_key(P: FanoPolytope) -> CanonicalKey:
    """Total invariant of the unimodular equivalence class of ``P``.

    Example:
        >>> from analysis.families import fano
        >>> canonical_key(fano([(1, 0), (0, 1), (-1, -1)])) == canonical_key(fano([(-1, 0), (0, -1), (1, 1)]))
        True
    """
    rows = normal_form(P)
    text = f"{P.dim};{len(rows)};" + ";".join(",".join(str(x) for x in row) for row in rows)
    return CanonicalKey(text.encode("ascii"))
