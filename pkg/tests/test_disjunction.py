import random

import pytest

from polyunion.disjunction import (DisjunctionError, balas_ef, big_m,
                                   conv_union, convex_hull_property_check,
                                   fix_lambda, project_to_x,
                                   split_disjunction)
from polyunion.polyfile import loads
from polyunion.polytope import (HRep, VRep, canon_ineq, polytope_from_hrep,
                                polytopes_equal_as_sets, random_polytope,
                                vertex_enumeration)
from polyunion.rational import ONE, ZERO, rat

SEG01 = HRep(((ONE,), (-ONE,)), (ONE, ZERO))
SEG23 = HRep(((ONE,), (-ONE,)), (rat(3), rat(-2)))


def canonical_rows(h: HRep):
    return sorted(canon_ineq(a, b) for a, b in h.rows())


def test_balas_sizes():
    ef = balas_ef(SEG01, SEG23)
    assert ef.h.nrows == 2 + 2 + 2
    assert ef.h.dim == 2 * 1 + 1
    assert (ef.d, ef.f1, ef.f2) == (1, 2, 2)


def test_balas_projection_of_segments():
    ef = balas_ef(SEG01, SEG23)
    proj = polytope_from_hrep(project_to_x(ef), strict=False)
    assert sorted(proj.v.points) == [(ZERO,), (rat(3),)]


def test_balas_equals_hull_randomized():
    rng = random.Random(7)
    for d in (1, 2, 3):
        for _ in range(3):
            p1 = random_polytope(rng, d)
            p2 = random_polytope(rng, d)
            ef = balas_ef(p1.full_hrep(), p2.full_hrep())
            proj = project_to_x(ef)
            hull = conv_union(p1.v, p2.v)
            assert canonical_rows(proj) == canonical_rows(hull.full_hrep())


def test_balas_rejects_unbounded_side():
    with pytest.raises(DisjunctionError):
        balas_ef(SEG01, HRep(((ONE,),), (ONE,)))


def test_ef_serialization_header():
    ef = balas_ef(SEG01, SEG23)
    text = ef.serialize()
    assert "#vars x:1 x1:1 lambda:1" in text
    obj, comments = loads(text)
    assert obj == ef.h


def test_big_m_tight_values():
    rep = big_m(SEG01, SEG23, "tight")
    assert rep.bigM1 == (rat(2), rat(-2))
    assert rep.bigM2 == (rat(-2), rat(2))
    assert "#integral lambda" in rep.serialize()


def test_big_m_lambda_slices_recover_sides():
    rep = big_m(SEG01, SEG23, "tight")
    lam = rep.h.dim - 1
    for value, side in ((ONE, SEG01), (ZERO, SEG23)):
        sl = fix_lambda(rep.h, lam, value)
        got = vertex_enumeration(sl)
        want = vertex_enumeration(side)
        assert sorted(got.points) == sorted(want.points)


def test_big_m_hull_property_contrast():
    hull = conv_union(VRep(((ZERO,), (ONE,))), VRep(((rat(2),), (rat(3),))))
    tight = big_m(SEG01, SEG23, "tight")
    assert convex_hull_property_check(tight, hull)["holds"]
    loose = big_m(SEG01, SEG23, "factor", rat(5))
    res = convex_hull_property_check(loose, hull)
    assert not res["holds"]
    w = res["witness"]
    assert w is not None and not hull.contains(w)


def test_factor_mode_needs_rho():
    with pytest.raises(DisjunctionError):
        big_m(SEG01, SEG23, "factor")


def test_split_disjunction():
    p = polytope_from_hrep(HRep(((ONE,), (-ONE,)), (rat(3), ZERO)))
    left, right = split_disjunction(p, (ONE,), ONE)
    lv = vertex_enumeration(left)
    rv = vertex_enumeration(right)
    assert sorted(lv.points) == [(ZERO,), (ONE,)]
    assert sorted(rv.points) == [(rat(2),), (rat(3),)]


def test_conv_union_lower_dimensional_inputs():
    p = conv_union(VRep(((ZERO, ZERO),)), VRep(((ONE, ONE),)))
    assert p.dim == 1 and p.n_vertices == 2
