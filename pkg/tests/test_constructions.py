import itertools

import pytest

from polyunion.constructions import (CertificateError, ConstructionError,
                                     build_colored_polar, build_construction,
                                     cayley_embedding, cayley_slice,
                                     centered_polar, centered_simplex_in_subspace,
                                     certificate_inequality, color_facets,
                                     colorful_faces, colorful_facet_certificate,
                                     cross_polytope_family, cyclic_polytope,
                                     homogenization, lemma4_subspace,
                                     lift_project_instance, minkowski_combination,
                                     moment_curve_point, perturbed_polar,
                                     point_family_S, verify_certificate_on_cayley)
from polyunion.polytope import (VRep, canon_ineq, faces_of_dim,
                                polytope_from_hrep, polytope_from_points,
                                polytopes_equal_as_sets, vertex_enumeration)
from polyunion.rational import ONE, ZERO, dot, mat_rank, rat, vsub


def test_moment_curve():
    assert moment_curve_point(2, 3) == (rat(2), rat(4), rat(8))
    assert moment_curve_point(rat(1, 2), 2) == (rat(1, 2), rat(1, 4))


def test_cyclic_polytope_is_simplicial_and_neighborly():
    p = cyclic_polytope(4, 8)
    assert p.n_vertices == 8 and p.dim == 4
    # simplicial: every facet has exactly d vertices
    assert all(len(inc) == 4 for inc in p.incidence)
    # 2-neighborly: every vertex pair spans an edge
    edges = {f.incident_vertices for f in faces_of_dim(p, 1)}
    assert len(edges) == 28


def test_cyclic_rejects_repeated_parameters():
    with pytest.raises(ConstructionError):
        cyclic_polytope(2, 4, t=[1, 1, 2, 3])


def test_centered_polar_swaps_counts():
    p = cyclic_polytope(2, 5)
    q = centered_polar(p)
    assert q.n_facets == p.n_vertices and q.n_vertices == p.n_facets
    # polar facets are in vertex order: row i from vertex i minus the centroid
    assert q.h.nrows == 5


def test_color_classes():
    _, dc = build_colored_polar(2)
    assert dc.n_classes == 1 and dc.class_rows(0) == [0, 1, 2, 3]
    _, dc4 = build_colored_polar(4)
    assert dc4.n_classes == 2
    assert dc4.class_rows(0) == list(range(8))
    assert dc4.class_rows(1) == list(range(8, 16))


def test_lemma4_subspace_rank_condition():
    dpoly, _ = build_colored_polar(2)
    basis = lemma4_subspace(dpoly, 1)
    assert len(basis) == 1
    for f in faces_of_dim(dpoly, 1):
        normals = [dpoly.h.A[i] for i in f.tight_facets]
        assert mat_rank(normals + basis) == len(normals) + 1


def test_centered_simplex():
    pert = centered_simplex_in_subspace([(ONE, ZERO), (ZERO, ONE)])
    assert sum(pert.nu) == ONE
    total = tuple(sum(col) for col in zip(*pert.u))
    assert total == (ZERO, ZERO)


def test_perturbed_polar_keeps_combinatorics():
    dpoly, dc, qpoly, pert = build_construction(4)
    assert qpoly.n_facets == dpoly.n_facets == 16
    assert qpoly.n_vertices == dpoly.n_vertices
    assert pert.scale_exponent >= 0


def test_colorful_faces_d2():
    dpoly, dc = build_colored_polar(2)
    assert colorful_faces(dc, dpoly) == [(0,), (1,), (2,), (3,)]


def test_certificates_d2_match_full_enumeration():
    dpoly, dc, qpoly, pert = build_construction(2)
    cay = cayley_embedding(dpoly.v, qpoly.v)
    facet_rows = {canon_ineq(a, b) for a, b in cay.h.rows()}
    rows = set()
    for tup in colorful_faces(dc, dpoly):
        cert = colorful_facet_certificate(dpoly, qpoly, dc, pert, tup)
        verify_certificate_on_cayley(cert, dpoly, qpoly)
        rows.add(canon_ineq(*certificate_inequality(cert)))
    assert len(rows) == 4 and rows <= facet_rows


def test_certificate_rejects_noncolorful_tuple():
    dpoly, dc, qpoly, pert = build_construction(2)
    with pytest.raises(CertificateError):
        colorful_facet_certificate(dpoly, qpoly, dc, pert, (0, 1))


def test_cross_polytope_family():
    for d in (1, 2, 3, 4):
        fam = cross_polytope_family(d)
        q = fam["Q"]
        assert q.n_facets == 2 ** d and q.n_vertices == 2 * d
        assert fam["P1"].n_vertices == d and fam["Pm1"].n_vertices == d
        ref = polytope_from_points(q.v.points)
        assert sorted(canon_ineq(a, b) for a, b in ref.h.rows()) == \
            sorted(canon_ineq(a, b) for a, b in q.h.rows())


def test_point_family_S():
    S = point_family_S(3, rat(1, 2))
    assert len(S) == 8
    assert all(abs(x) == rat(1, 2) for s in S for x in s)


def test_homogenization_of_square():
    sq = [(x, y, ONE) for x in (ZERO, ONE) for y in (ZERO, ONE)]
    apex = (rat(1, 2), rat(1, 2), ZERO)
    h = homogenization(VRep(tuple(sq)), apex)
    assert h.nrows == 4
    for p in sq:
        assert h.contains(p)
    assert h.contains(apex)
    # points beyond the apex on the far side are cut off
    assert not h.contains((rat(1, 2), rat(1, 2), rat(-1)))


def test_homogenization_rejects_apex_in_hull():
    sq = [(x, y, ONE) for x in (ZERO, ONE) for y in (ZERO, ONE)]
    with pytest.raises(ConstructionError):
        homogenization(VRep(tuple(sq)), (rat(1, 2), rat(1, 2), ONE))


def test_lift_project_instance_d3():
    inst = lift_project_instance(3)
    assert inst.p.n_facets == 10
    assert all(ZERO <= x <= ONE for v in inst.p.v.points for x in v)
    lower = [v for v in inst.p.v.points if v[-1] == ZERO]
    upper = [v for v in inst.p.v.points if v[-1] == ONE]
    assert len(lower) == 4 and len(upper) == 4


def test_lift_project_rejects_even_d():
    with pytest.raises(ConstructionError):
        lift_project_instance(4)


def test_cayley_slice_is_minkowski_mean():
    p0 = polytope_from_points([(ZERO, ZERO), (ONE, ZERO), (ZERO, ONE)])
    p1 = polytope_from_points([(ONE, ONE), (rat(2), ONE)])
    cay = cayley_embedding(p0.v, p1.v)
    half = cayley_slice(cay, rat(1, 2))
    mean = minkowski_combination(p0, p1, rat(1, 2))
    assert polytopes_equal_as_sets(half, mean)
