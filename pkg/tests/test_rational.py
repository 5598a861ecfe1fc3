import pytest
from hypothesis import given, strategies as st

from polyunion.rational import (ONE, ZERO, format_rat, kernel_basis, mat_rank,
                                parse_rat, rat, rref, solve_linear, dot, vadd,
                                vscale, vsub)

rationals = st.fractions(min_value=-1000, max_value=1000,
                         max_denominator=100).map(rat)


def test_rat_literals():
    assert rat(3, 6) == rat(1, 2)
    assert parse_rat("-7/3") == rat(-7, 3)
    assert parse_rat("5") == rat(5)
    assert format_rat(rat(10, 4)) == "5/2"
    assert format_rat(rat(-3)) == "-3"


@pytest.mark.parametrize("bad", ["2/4", "3/1", "1/0", "1/-2", "", "a", "1.5"])
def test_parse_rejects_noncanonical(bad):
    with pytest.raises(ValueError):
        parse_rat(bad)


@given(rationals)
def test_format_parse_roundtrip(x):
    assert parse_rat(format_rat(x)) == x


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    if a != 0:
        assert a * (ONE / a) == ONE


vecs3 = st.tuples(rationals, rationals, rationals)


@given(vecs3, vecs3, rationals)
def test_dot_linearity(u, v, s):
    assert dot(vadd(u, v), u) == dot(u, u) + dot(v, u)
    assert dot(vscale(s, u), v) == s * dot(u, v)


def test_rank_and_kernel():
    rows = [(rat(1), rat(2), rat(3)), (rat(2), rat(4), rat(6)),
            (rat(0), rat(1), rat(1))]
    assert mat_rank(rows) == 2
    ker = kernel_basis(rows)
    assert len(ker) == 1
    for r in rows:
        assert dot(r, ker[0]) == 0


@given(st.lists(vecs3, min_size=1, max_size=5))
def test_kernel_dimension_law(rows):
    r = mat_rank(rows)
    assert r + len(kernel_basis(rows)) == 3


def test_solve_linear():
    A = [(rat(2), rat(0)), (rat(1), rat(1))]
    x = solve_linear(A, (rat(4), rat(5)))
    assert x == (rat(2), rat(3))
    assert solve_linear([(rat(1), rat(1)), (rat(1), rat(1))],
                        (rat(0), rat(1))) is None


def test_rref_idempotent():
    rows = [(rat(0), rat(2), rat(4)), (rat(1), rat(1), rat(1))]
    red, piv = rref(rows)
    red2, piv2 = rref(red)
    assert red == red2 and piv == piv2
