import random

import pytest
from hypothesis import given, settings, strategies as st

from polyunion.polytope import (HRep, PolytopeError, VRep, all_faces,
                                affine_dim, canon_ineq, combinatorial_equal,
                                cone_dim, face_dim, face_of_vertices,
                                faces_of_dim, optimality_cone_closed,
                                facet_enumeration, facet_enumeration_bruteforce,
                                find_combinatorial_bijection, fm_project,
                                in_optimality_cone, interior_point,
                                maximizing_face, optimality_cone,
                                polytope_from_hrep, polytope_from_points,
                                polytopes_equal_as_sets, random_polytope,
                                remove_redundant_rows, vertex_enumeration,
                                vertex_enumeration_bruteforce,
                                vertex_enumeration_dd)
from polyunion.rational import ONE, ZERO, dot, rat

coords = st.fractions(min_value=-4, max_value=4, max_denominator=4).map(rat)


def cube(d=3):
    pts = []
    for mask in range(2 ** d):
        pts.append(tuple(ONE if mask >> i & 1 else ZERO for i in range(d)))
    return polytope_from_points(pts)


def simplex(d):
    pts = [tuple(ZERO for _ in range(d))]
    for i in range(d):
        pts.append(tuple(ONE if j == i else ZERO for j in range(d)))
    return polytope_from_points(pts)


def test_cube_counts():
    c = cube()
    assert c.n_vertices == 8 and c.n_facets == 6
    faces = all_faces(c)
    edges = [vs for vs in faces if face_dim(c, vs) == 1]
    assert len(edges) == 12
    # Euler relation V - E + F = 2
    assert 8 - 12 + 6 == 2


def test_octahedron():
    pts = [tuple(rat(s) if i == j else ZERO for i in range(3))
           for j in range(3) for s in (1, -1)]
    p = polytope_from_points(pts)
    assert p.n_facets == 8 and p.n_vertices == 6


def test_lower_dimensional_polytope():
    # a square living in the plane x = 2
    pts = [(rat(2), y, z) for y in (ZERO, ONE) for z in (ZERO, ONE)]
    p = polytope_from_points(pts)
    assert p.dim == 2 and p.n_facets == 4 and p.n_vertices == 4
    assert len(p.equations) == 1
    a, b = p.equations[0]
    assert all(dot(a, v) == b for v in p.v.points)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(coords, coords, coords), min_size=4, max_size=8))
def test_conversion_routes_agree(pts):
    try:
        p = polytope_from_points(pts)
    except PolytopeError:
        return
    if p.dim < 3:
        return
    h, eq = facet_enumeration_bruteforce(p.v)
    assert not eq
    assert sorted(canon_ineq(a, b) for a, b in h.rows()) == \
        sorted(canon_ineq(a, b) for a, b in p.h.rows())
    assert sorted(vertex_enumeration_bruteforce(p.h).points) == \
        sorted(vertex_enumeration_dd(p.h).points)


def test_hrep_roundtrip_preserves_row_order():
    c = cube()
    p = polytope_from_hrep(c.h, strict=True)
    assert p.h.A == c.h.A and p.h.b == c.h.b


def test_strict_mode_rejects_redundancy():
    c = cube()
    A = c.h.A + ((ONE, ZERO, ZERO),)
    b = c.h.b + (rat(7),)
    with pytest.raises(PolytopeError):
        polytope_from_hrep(HRep(A, b), strict=True)
    p = polytope_from_hrep(HRep(A, b), strict=False)
    assert p.n_facets == 6


def test_empty_and_unbounded_rejected():
    with pytest.raises(PolytopeError, match="empty"):
        polytope_from_hrep(HRep(((ONE,), (-ONE,)), (rat(-1), ZERO)))
    with pytest.raises(PolytopeError, match="not a polytope"):
        polytope_from_hrep(HRep(((ONE,),), (ONE,)))


def test_interior_point():
    c = cube()
    x = interior_point(c.h)
    assert all(dot(a, x) < b for a, b in c.h.rows())


def test_remove_redundant_rows():
    rows = [((ONE,), ONE), ((ONE,), rat(2)), ((-ONE,), ZERO), ((ONE,), ONE)]
    kept = remove_redundant_rows(rows)
    assert sorted(kept) == [((-ONE,), ZERO), ((ONE,), ONE)]


def test_fm_project_cube_to_square():
    c = cube()
    proj = fm_project(c.full_hrep(), [0, 1])
    sq = polytope_from_points([(x, y) for x in (ZERO, ONE) for y in (ZERO, ONE)])
    got = polytope_from_hrep(proj, strict=False)
    assert polytopes_equal_as_sets(got, sq)


def test_fm_matches_vertex_projection():
    rng = random.Random(3)
    for _ in range(5):
        p = random_polytope(rng, 3)
        proj = polytope_from_hrep(fm_project(p.full_hrep(), [0, 1]),
                                  strict=False)
        direct = polytope_from_points([v[:2] for v in p.v.points])
        assert polytopes_equal_as_sets(proj, direct)


def test_face_lattice_of_simplex():
    s = simplex(3)
    faces = all_faces(s)
    # 4 vertices + 6 edges + 4 facets + the polytope itself (no empty face)
    assert len(faces) == 15


def test_optimality_cones_partition_directions():
    p = cube(2)
    rng = random.Random(11)
    for _ in range(100):
        c = tuple(rat(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(2))
        f = maximizing_face(p, c)
        assert in_optimality_cone(p, f, c)
        # and no other face's open cone contains c
        others = [g for k in range(p.dim + 1) for g in faces_of_dim(p, k)
                  if g.incident_vertices != f.incident_vertices]
        assert not any(in_optimality_cone(p, g, c) for g in others)


def test_cone_dimension_law():
    # dim of the closed optimality cone of F is d - dim F
    p = cube(2)
    for k in range(p.dim + 1):
        for f in faces_of_dim(p, k):
            assert cone_dim(optimality_cone_closed(p, f)) == p.dim - f.dim


def test_combinatorial_equality():
    sq1 = polytope_from_points([(x, y) for x in (ZERO, ONE) for y in (ZERO, ONE)])
    sq2 = polytope_from_points([(2 * x, 3 * y) for x in (ZERO, ONE)
                                for y in (ZERO, ONE)])
    bij = find_combinatorial_bijection(sq1, sq2)
    assert bij is not None
    assert combinatorial_equal(sq1, sq2, bij)
    tri = simplex(2)
    assert find_combinatorial_bijection(sq1, tri) is None


def test_affine_dim():
    assert affine_dim(cube()) == 3
    seg = polytope_from_points([(ZERO, ZERO), (ONE, ONE)])
    assert affine_dim(seg) == 1


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=1, max_value=3), st.integers(min_value=0, max_value=10**6))
def test_random_polytope_vertices_match_bruteforce(d, seed):
    p = random_polytope(random.Random(seed), d)
    assert sorted(p.v.points) == \
        sorted(vertex_enumeration_bruteforce(p.full_hrep()).points)
