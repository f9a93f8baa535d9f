from fractions import Fraction

import pytest

from errors import GeometryError
from geometry.polytope import centroid
from analysis.fano import (
    FanoPolytope,
    b_transform_fano,
    has_zero_barycenter,
    is_kahler_einstein,
    is_smooth,
    validate_fano,
)
from analysis.symmetry import has_nontrivial_rotation, is_symmetric
from classification.canonical import canonical_key
from analysis.families import (
    FIXTURES,
    cross_polytope,
    fano,
    fano_cube,
    fuzzy_match_fixture,
    ke_triangle_normal_form,
    named_fixture,
    s_mn,
    unit_interval,
)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_every_fixture_is_fano(name):
    P = named_fixture(name)
    assert isinstance(P, FanoPolytope)
    assert P.polytope.vertex_set == frozenset(FIXTURES[name])


@pytest.mark.parametrize(
    "query, expected",
    [
        ("to-ke", "to-ke"),
        ("to ke", "to-ke"),
        ("hexagn", "hexagon"),
        ("bzero-p2", "bzero-p2"),
        ("zzz", None),
    ],
)
def test_fuzzy_match_fixture(query, expected):
    assert fuzzy_match_fixture(query) == expected


def test_unknown_fixture():
    with pytest.raises(KeyError):
        named_fixture("no such polytope")


def test_fano_rejects_non_fano_input():
    with pytest.raises(GeometryError, match="NonPrimitiveVertex"):
        fano([(2, 0), (0, 1), (-1, -1)])


def test_s_mn():
    assert s_mn(0, 0).polytope.vertex_set == {(1, 0), (0, 1), (-1, 0), (0, -1)}
    assert s_mn(2, 1).polytope.vertex_set == {(3, -2), (-2, 3), (-2, 1), (1, -2)}
    with pytest.raises(GeometryError):
        s_mn(-1, 0)


@pytest.mark.parametrize("a, b", [(1, 0), (3, 2), (5, 2)])
def test_ke_triangle_normal_form(a, b):
    P = ke_triangle_normal_form(a, b)
    assert len(P) == 3
    assert has_zero_barycenter(P)
    assert is_kahler_einstein(P)


def test_cube_and_cross_polytope():
    assert fano_cube(2).polytope.vertex_set == {(1, 1), (1, -1), (-1, 1), (-1, -1)}
    assert cross_polytope(2).polytope.vertex_set == {(1, 0), (0, 1), (-1, 0), (0, -1)}
    assert len(fano_cube(4)) == 16
    assert len(cross_polytope(4)) == 8


def test_unit_interval():
    P = unit_interval()
    assert P.dim == 1
    assert P.vertices == ((-1,), (1,))


SMN_GRID = [(m, n) for m in range(6) for n in range(6)]
UNIT_SQUARE = {(1, 1), (-1, 1), (-1, -1), (1, -1)}


@pytest.mark.parametrize("m, n", SMN_GRID)
def test_s_mn_trajectory(m, n):
    P = s_mn(m, n)
    first = b_transform_fano(P)
    assert first.polytope.vertex_set == UNIT_SQUARE
    second = b_transform_fano(first)
    assert second.polytope.vertex_set == s_mn(0, 0).polytope.vertex_set
    assert is_kahler_einstein(first) and is_kahler_einstein(second)


@pytest.mark.parametrize("m, n", SMN_GRID)
def test_s_mn_centroid_and_rotations(m, n):
    P = s_mn(m, n)
    c = Fraction(m - n, 6 * (m + n + 1))
    assert centroid(P.polytope) == (c, c)
    assert has_nontrivial_rotation(P) == (m == n)
    assert has_nontrivial_rotation(b_transform_fano(P))


@pytest.mark.parametrize("d", [2, 3, 4])
def test_cube_and_cross_polytope_alternate(d):
    cube = fano_cube(d)
    cross = b_transform_fano(cube)
    assert cross.polytope.vertex_set == cross_polytope(d).polytope.vertex_set
    assert canonical_key(b_transform_fano(cross)) == canonical_key(cube)
    assert not is_smooth(cube)
    assert is_smooth(cross)
    assert is_kahler_einstein(cube) and is_kahler_einstein(cross)


@pytest.mark.parametrize("a, b", [(1, 0), (3, 2), (5, 2), (5, 3), (7, 4), (1, 5)])
def test_ke_triangle_transform_is_its_negative(a, b):
    P = ke_triangle_normal_form(a, b)
    assert b_transform_fano(P).polytope.vertex_set == (-P.polytope).vertex_set
    assert all(x == 0 for x in centroid(P.polytope))


def test_ke_triangles_found_by_search():
    found = []
    for a in range(1, 31):
        for b in range(-30, 31):
            result = validate_fano([(a, -b), (0, 1), (-a, b - 1)])
            if isinstance(result, FanoPolytope) and is_kahler_einstein(result):
                found.append(result)
    assert len(found) >= 100
    for P in found:
        assert b_transform_fano(P).polytope.vertex_set == (-P.polytope).vertex_set
        assert all(x == 0 for x in centroid(P.polytope))


def test_hexagon_loses_two_vertices():
    P = named_fixture("hexagon")
    assert is_symmetric(P) and is_kahler_einstein(P)
    image = b_transform_fano(P)
    assert image.polytope.vertex_set == {(4, 3), (-2, 3), (-4, -3), (2, -3)}
    assert is_symmetric(image)
    assert is_kahler_einstein(image)
