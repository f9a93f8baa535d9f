import pytest
from hypothesis import given

from errors import UnsupportedDimensionError
from geometry.lattice import UnimodularMap, add, primitive_index
from geometry.polytope import centroid
from analysis.fano import is_kahler_einstein, validate_fano
from analysis.families import cross_polytope, fano_cube, named_fixture, s_mn
from analysis.symmetry import automorphisms, has_nontrivial_rotation, is_symmetric, vertex_signature
from tests.strategies import fano_polygons, unimodular_maps, wide_fano_polygons


@pytest.mark.parametrize(
    "polytope, order",
    [
        (named_fixture("square"), 8),
        (named_fixture("diamond"), 8),
        (named_fixture("projective-plane"), 6),
        (fano_cube(3), 48),
        (cross_polytope(3), 48),
    ],
)
def test_automorphism_group_order(polytope, order):
    group = automorphisms(polytope)
    assert group.order == order
    assert UnimodularMap.identity(polytope.dim) in group
    assert group.is_closed()


def test_is_symmetric():
    assert is_symmetric(named_fixture("square"))
    assert is_symmetric(named_fixture("projective-plane"))
    assert is_symmetric(named_fixture("hexagon"))
    assert is_symmetric(fano_cube(3))
    assert not is_symmetric(named_fixture("bzero-p1"))


def test_nontrivial_rotation():
    assert has_nontrivial_rotation(named_fixture("square"))
    assert has_nontrivial_rotation(named_fixture("projective-plane"))
    assert not has_nontrivial_rotation(named_fixture("bzero-p1"))


def test_rotation_needs_a_polygon():
    with pytest.raises(UnsupportedDimensionError):
        has_nontrivial_rotation(fano_cube(3))


def test_vertex_signature():
    P = named_fixture("square")
    assert all(vertex_signature(P, i) == ((2, 1), (2, 1)) for i in range(4))


@given(fano_polygons(), unimodular_maps())
def test_group_order_is_an_invariant(P, u):
    image = validate_fano([u(v) for v in P.vertices])
    assert automorphisms(image).order == automorphisms(P).order
    assert is_symmetric(image) == is_symmetric(P)


@given(fano_polygons())
def test_symmetric_polygons_are_kahler_einstein(P):
    if is_symmetric(P):
        assert is_kahler_einstein(P)


@given(fano_polygons())
def test_groups_are_closed(P):
    assert automorphisms(P).is_closed()


@pytest.mark.parametrize("m, n", [(m, n) for m in range(6) for n in range(6)])
def test_s_mn_is_symmetric_only_when_balanced(m, n):
    P = s_mn(m, n)
    swap = UnimodularMap.from_rows([[0, 1], [1, 0]])
    group = automorphisms(P)
    assert swap in group
    assert is_symmetric(P) == (m == n)
    if m != n:
        # The swap fixes the diagonal, which holds the nonzero barycenter.
        assert group.order == 2


@given(fano_polygons())
def test_automorphisms_fix_the_barycenter(P):
    c = centroid(P.polytope)
    assert all(u(c) == c for u in automorphisms(P))


@given(wide_fano_polygons())
def test_rotation_forces_zero_barycenter(P):
    if has_nontrivial_rotation(P):
        assert all(x == 0 for x in centroid(P.polytope))


@given(wide_fano_polygons())
def test_automorphisms_preserve_edge_sum_indices(P):
    v = P.vertices
    n = len(v)
    indices = {
        frozenset((v[i], v[(i + 1) % n])): primitive_index(add(v[i], v[(i + 1) % n]))
        for i in range(n)
    }
    for u in automorphisms(P):
        for edge, index in indices.items():
            a, b = edge
            assert indices[frozenset((u(a), u(b)))] == index
