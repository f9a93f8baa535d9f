from fractions import Fraction
from itertools import product

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from errors import DegeneratePolytopeError, DimensionMismatchError, GeometryError
from geometry.convex import facet_enumeration
from geometry.polytope import (
    HalfSpace,
    VPolytope,
    centroid,
    contains_origin_interior,
    dual,
    facets,
    hull,
    triangulation,
    volume,
)
from tests.strategies import fano_polygons, unimodular_maps, wide_fano_polygons

SQUARE = [(1, 1), (-1, 1), (-1, -1), (1, -1)]
CUBE = list(product((1, -1), repeat=3))
OCTAHEDRON = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 0, 0), (0, -1, 0), (0, 0, -1)]


def test_hull_drops_interior_and_collinear_points():
    P = hull(SQUARE + [(0, 0), (1, 0), (0, -1)])
    assert P.vertices == ((-1, -1), (1, -1), (1, 1), (-1, 1))
    assert P.affine_dim == 2
    assert P.is_full_dimensional


def test_hull_of_collinear_points_is_a_segment():
    P = hull([(1, -1), (-1, -1), (0, -1)])
    assert P.affine_dim == 1
    assert P.vertex_set == {(1, -1), (-1, -1)}
    assert not P.is_full_dimensional


def test_hull_of_one_point():
    P = hull([(3, 4), (3, 4)])
    assert P.affine_dim == 0
    assert P.vertices == ((3, 4),)


def test_hull_of_flat_points_in_space():
    P = hull([(1, 1, 0), (-1, 1, 0), (-1, -1, 0), (1, -1, 0), (0, 0, 0)])
    assert P.ambient_dim == 3
    assert P.affine_dim == 2
    assert P.vertex_set == {(1, 1, 0), (-1, 1, 0), (-1, -1, 0), (1, -1, 0)}


def test_hull_errors():
    with pytest.raises(GeometryError):
        hull([])
    with pytest.raises(DimensionMismatchError):
        hull([(1, 0), (0, 1, 0)])


def test_hull_of_interval():
    P = hull([(-1,), (1,), (0,)])
    assert P.vertices == ((-1,), (1,))
    assert len(facets(P)) == 2


def test_square_facets():
    P = hull(SQUARE)
    F = facets(P)
    assert len(F) == 4
    assert all(f.halfspace.offset == 1 for f in F)
    assert F[0].halfspace.normal == (0, 1)
    assert F[0].vertex_indices == (0, 1)
    assert len(F.incident_facets(0)) == 2


@pytest.mark.parametrize(
    "points, facet_count, facet_size",
    [
        (CUBE, 6, 4),
        (OCTAHEDRON, 8, 3),
        (CUBE + [(0, 0, 0), (1, 0, 0)], 6, 4),
    ],
)
def test_hull_in_space(points, facet_count, facet_size):
    P = hull(points)
    assert len(P) == (8 if len(points) >= 8 else 6)
    F = facets(P)
    assert len(F) == facet_count
    assert all(len(f.vertex_indices) == facet_size for f in F)
    assert all(f.halfspace.offset == 1 for f in F)


def test_facet_enumeration_is_exact():
    half = Fraction(1, 2)
    points = [tuple(half * x for x in v) for v in CUBE] + [(half, 0, 0)]
    raw = facet_enumeration(points, 3)
    assert sorted(normal for normal, _, _ in raw) == sorted(
        [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    )
    assert all(offset == half for _, offset, _ in raw)
    tight = {normal: indices for normal, _, indices in raw}
    assert 8 in tight[(-1, 0, 0)]
    assert len(tight[(-1, 0, 0)]) == 5
    assert all(len(indices) == 4 for normal, indices in tight.items() if normal != (-1, 0, 0))


def test_facets_are_rebuilt_when_missing():
    P = hull(SQUARE)
    bare = VPolytope(P.vertices, 2, 2)
    assert [f.halfspace for f in facets(bare)] == [f.halfspace for f in facets(P)]


def test_facets_of_flat_polytope():
    with pytest.raises(DegeneratePolytopeError):
        facets(hull([(1, 0), (-1, 0)]))


def test_halfspace():
    h = HalfSpace((0, 1), Fraction(1))
    assert h.contains((5, -1))
    assert h.is_tight((5, -1))
    assert not h.contains((0, -2))


def test_contains_origin_interior():
    assert contains_origin_interior(hull(SQUARE))
    assert not contains_origin_interior(hull([(1, 0), (-1, 1), (1, -1)]))
    assert not contains_origin_interior(hull([(1, 0), (-1, 0)]))
    assert contains_origin_interior(hull(SQUARE), method="orders")


@given(fano_polygons())
def test_origin_tests_agree(P):
    assert contains_origin_interior(P.polytope, method="orders")
    assert contains_origin_interior(P.polytope, method="facets")


def test_dual_of_square_is_diamond():
    assert dual(hull(SQUARE)).vertex_set == {(1, 0), (0, 1), (-1, 0), (0, -1)}


def test_dual_of_triangle_has_rational_vertices():
    D = dual(hull([(0, 1), (3, -2), (-4, 1)]))
    assert D.vertex_set == {(Fraction(3, 5), Fraction(7, 5)), (-1, -1), (0, -1)}


@settings(max_examples=200)
@given(
    st.integers(1, 30),
    st.integers(-30, 30),
    st.integers(1, 30),
    st.integers(-30, 30),
)
def test_dual_triangle_closed_form(a, b, c, d):
    det = b * c - a * d
    assume(det > 0)
    D = dual(hull([(a, -b), (0, 1), (-c, d)]))
    assert D.vertex_set == {
        (Fraction(-b - 1, a), -1),
        (Fraction(1 - d, c), -1),
        (Fraction(b + d, det), Fraction(a + c, det)),
    }
    assert centroid(D)[1] == (Fraction(a + c, det) - 2) / 3


@given(wide_fano_polygons())
def test_dual_is_an_involution(P):
    assert dual(dual(P.polytope)).vertex_set == P.polytope.vertex_set


def test_dual_needs_interior_origin():
    with pytest.raises(GeometryError):
        dual(hull([(1, 0), (-1, 1), (1, -1)]))


@pytest.mark.parametrize(
    "points, expected",
    [
        (SQUARE, 4),
        ([(1, 0), (0, 1), (-1, -1)], Fraction(3, 2)),
        (CUBE, 8),
        (OCTAHEDRON, Fraction(4, 3)),
        ([(0, 0), (2, 0), (0, 2)], 2),
    ],
)
def test_volume(points, expected):
    assert volume(hull(points)) == expected


def test_volume_of_flat_polytope():
    with pytest.raises(DegeneratePolytopeError):
        volume(hull([(0, 0), (1, 1)]))


def test_centroid():
    assert centroid(hull(SQUARE)) == (0, 0)
    assert centroid(hull([(0, 0), (2, 0), (0, 2)])) == (Fraction(2, 3), Fraction(2, 3))
    assert centroid(hull(CUBE)) == (0, 0, 0)
    assert centroid(hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])) == (Fraction(1, 4),) * 3


def test_triangulation_covers_the_volume():
    P = hull(CUBE)
    simplices = triangulation(P, apex=P.vertices[0])
    assert all(len(s) == 4 for s in simplices)
    assert volume(P) == 8


@given(fano_polygons())
def test_centroid_does_not_depend_on_apex(P):
    assert centroid(P.polytope, apex=P.vertices[0]) == centroid(P.polytope)


@given(fano_polygons(), unimodular_maps())
def test_volume_and_centroid_are_equivariant(P, u):
    image = hull([u(v) for v in P.vertices])
    assert volume(image) == volume(P.polytope)
    assert centroid(image) == u(centroid(P.polytope))


def test_negation():
    P = hull([(1, 0), (0, 1), (-1, -1)])
    assert (-P).vertex_set == {(-1, 0), (0, -1), (1, 1)}
