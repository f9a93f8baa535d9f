"""Hypothesis strategies for lattice polygons and unimodular maps."""

from functools import reduce
from math import gcd

from hypothesis import strategies as st

from geometry.lattice import UnimodularMap
from analysis.fano import FanoPolytope, validate_fano
from data.enumerator import primitive_points

PLANE_GENERATORS = [
    UnimodularMap.from_rows([[1, 1], [0, 1]]),
    UnimodularMap.from_rows([[1, -1], [0, 1]]),
    UnimodularMap.from_rows([[1, 0], [1, 1]]),
    UnimodularMap.from_rows([[1, 0], [-1, 1]]),
    UnimodularMap.from_rows([[0, 1], [1, 0]]),
    UnimodularMap.from_rows([[-1, 0], [0, 1]]),
]


def unimodular_maps(max_length: int = 5) -> st.SearchStrategy[UnimodularMap]:
    """Products of elementary plane maps, so entries stay small."""
    return st.lists(st.sampled_from(PLANE_GENERATORS), max_size=max_length).map(
        lambda factors: reduce(lambda a, b: a.compose(b), factors, UnimodularMap.identity(2))
    )


def fano_polygons(box: int = 4, max_vertices: int = 6) -> st.SearchStrategy[FanoPolytope]:
    """Fano polygons spanned by primitive points of a small box."""
    return (
        st.lists(st.sampled_from(primitive_points(box)), min_size=3, max_size=max_vertices, unique=True)
        .map(validate_fano)
        .filter(lambda result: isinstance(result, FanoPolytope))
    )


def wide_fano_polygons(bound: int = 50, max_points: int = 8) -> st.SearchStrategy[FanoPolytope]:
    """Fano polygons spanned by random primitive points with coordinates up to ``bound``."""
    point = st.tuples(st.integers(-bound, bound), st.integers(-bound, bound)).filter(
        lambda v: gcd(*v) == 1
    )
    return (
        st.lists(point, min_size=3, max_size=max_points, unique=True)
        .map(validate_fano)
        .filter(lambda result: isinstance(result, FanoPolytope))
    )
