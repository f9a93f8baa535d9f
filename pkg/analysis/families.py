"""Named Fano polytopes: parametrized families and the worked-example catalog."""

import logging
from itertools import product
from typing import Optional, Sequence

from rapidfuzz import fuzz, process

from config import ERROR_FIXTURE_NOT_FOUND, ERROR_NOT_FANO, FUZZY_MATCH_THRESHOLD
from errors import GeometryError
from geometry.lattice import LatticeVector
from analysis.fano import FanoPolytope, validate_fano

logger = logging.getLogger(__name__)


FIXTURES: dict[str, tuple[LatticeVector, ...]] = {
    "badbehavior-1": ((2, -1), (0, 1), (-1, 0)),
    "badbehavior-2": ((1, -2), (0, 1), (-1, -2)),
    "strict-b1": ((0, 1), (3, -2), (-4, 1)),
    "to-ke": ((-25, -12), (-5, -6), (25, 14)),
    "hexagon": ((3, -1), (3, 1), (1, 2), (-3, 1), (-3, -1), (-1, -2)),
    "bzero-p1": ((-2, -1), (-1, 3), (1, 2), (2, -3)),
    "bzero-p2": ((-5, -4), (-5, 8), (5, 1), (8, -5)),
    "square": ((1, 1), (-1, 1), (-1, -1), (1, -1)),
    "diamond": ((1, 0), (0, 1), (-1, 0), (0, -1)),
    "projective-plane": ((1, 0), (0, 1), (-1, -1)),
}


def fano(points: Sequence[Sequence[int]]) -> FanoPolytope:
    """Validate a point set that is expected to be Fano.

    Raises:
        GeometryError: If the hull is not a Fano polytope.
    """
    result = validate_fano(points)
    if not isinstance(result, FanoPolytope):
        raise GeometryError(f"{ERROR_NOT_FANO}: {result.value}")
    return result


def s_mn(m: int, n: int) -> FanoPolytope:
    """The quadrilateral conv{(m+1,-m), (-m,m+1), (-n-1,n), (n,-n-1)}.

    Example:
        >>> s_mn(0, 0).polytope.vertex_set == {(1, 0), (0, 1), (-1, 0), (0, -1)}
        True
    """
    if m < 0 or n < 0:
        raise GeometryError(f"{ERROR_NOT_FANO}: parameters must be non-negative, got m={m}, n={n}")
    return fano([(m + 1, -m), (-m, m + 1), (-n - 1, n), (n, -n - 1)])


def ke_triangle_normal_form(a: int, b: int) -> FanoPolytope:
    """The triangle conv{(a,-b), (0,1), (-a,b-1)}."""
    return fano([(a, -b), (0, 1), (-a, b - 1)])


def fano_cube(d: int) -> FanoPolytope:
    """The cube conv{(±1, ..., ±1)} of dimension ``d``."""
    return fano(list(product((1, -1), repeat=d)))


def cross_polytope(d: int) -> FanoPolytope:
    """The cross-polytope conv{±e_1, ..., ±e_d}."""
    units = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    return fano(units + [tuple(-x for x in e) for e in units])


def unit_interval() -> FanoPolytope:
    """The segment [-1, 1], the only Fano polytope of dimension one."""
    return fano([(-1,), (1,)])


def fuzzy_match_fixture(query: str) -> Optional[str]:
    """Find the best matching fixture name using fuzzy matching.

    Args:
        query: Fixture name query (can be partial or misspelled).

    Returns:
        Best matching fixture name, or None if no good match found.

    Example:
        >>> fuzzy_match_fixture("to ke")
        'to-ke'
    """
    names = list(FIXTURES)
    if query in names:
        return query

    result = process.extractOne(
        query,
        names,
        scorer=fuzz.ratio,
        score_cutoff=FUZZY_MATCH_THRESHOLD,
    )
    if result:
        matched, score, _ = result
        logger.info(f"Fuzzy matched '{query}' to '{matched}' (score: {score})")
        return str(matched)

    logger.warning(f"No fuzzy match found for fixture '{query}'")
    return None


def named_fixture(name: str) -> FanoPolytope:
    """Look up a worked example by (approximate) name.

    Raises:
        KeyError: If no fixture name is close enough.
    """
    matched = fuzzy_match_fixture(name)
    if matched is None:
        raise KeyError(f"{ERROR_FIXTURE_NOT_FOUND} ({name!r})")
    return fano(FIXTURES[matched])
