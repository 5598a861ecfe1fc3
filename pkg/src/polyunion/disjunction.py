"""Disjunctive formulations for the union of two polytopes.

The Balas extended formulation over (x, x1, lambda), the big-M
representation over (x, lambda) with per-row tight or loosened constants,
split disjunctions, and the convex-hull-property check against the
vertex-union hull oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lp import lp_solve
from .polyfile import dumps_hrep
from .polytope import (HRep, Polytope, PolytopeError, VRep, fm_project,
                       polytope_from_points, polytopes_equal_as_sets,
                       vertex_enumeration)
from .rational import ONE, ZERO, Rat, Vec, vzero


class DisjunctionError(Exception):
    pass


@dataclass(frozen=True)
class DisjunctiveEF:
    """Balas system over (x: d, x1: d, lambda: 1); f1+f2+2 rows, 2d+1 vars."""

    h: HRep
    d: int
    f1: int
    f2: int

    def serialize(self) -> str:
        return dumps_hrep(self.h, [f"#vars x:{self.d} x1:{self.d} lambda:1"])


@dataclass(frozen=True)
class MipRep:
    """Big-M representation over (x: d, lambda: 1); lambda is the integral
    variable and lambda=1 selects P1."""

    h: HRep
    d: int
    integral_vars: frozenset[int]
    bigM1: Vec
    bigM2: Vec

    def serialize(self) -> str:
        return dumps_hrep(self.h, [f"#vars x:{self.d} lambda:1", "#integral lambda"])


def _require_nonempty_bounded(h: HRep, name: str):
    d = h.dim
    if lp_solve(h.A, h.b, vzero(d)).status != "optimal":
        raise DisjunctionError(f"{name} is empty")
    for i in range(d):
        for sense in ("max", "min"):
            obj = tuple(ONE if j == i else ZERO for j in range(d))
            if lp_solve(h.A, h.b, obj, sense).status != "optimal":
                raise DisjunctionError(f"{name} is unbounded")


def balas_ef(h1: HRep, h2: HRep) -> DisjunctiveEF:
    """A1 x1 <= lambda b1;  A2 (x - x1) <= (1 - lambda) b2;  0 <= lambda <= 1."""
    if h1.dim != h2.dim:
        raise DisjunctionError("ambient dimensions differ")
    _require_nonempty_bounded(h1, "P1")
    _require_nonempty_bounded(h2, "P2")
    d = h1.dim
    rows = []
    rhs = []
    for a, b in h1.rows():
        rows.append(vzero(d) + tuple(a) + (-Rat(b),))
        rhs.append(ZERO)
    for a, b in h2.rows():
        rows.append(tuple(a) + tuple(-x for x in a) + (Rat(b),))
        rhs.append(Rat(b))
    lam = vzero(2 * d) + (ONE,)
    rows.append(tuple(-x for x in lam))
    rhs.append(ZERO)
    rows.append(lam)
    rhs.append(ONE)
    return DisjunctiveEF(HRep(tuple(rows), tuple(rhs)), d, h1.nrows, h2.nrows)


def project_to_x(ef) -> HRep:
    """proj_x of an extended formulation (first d coordinates)."""
    return fm_project(ef.h, range(ef.d))


def conv_union(v1: VRep, v2: VRep) -> Polytope:
    """conv(P1 u P2) from vertex lists; the oracle for all projection checks."""
    if not v1.points or not v2.points:
        raise DisjunctionError("empty input")
    if v1.dim != v2.dim:
        raise DisjunctionError("ambient dimensions differ")
    return polytope_from_points(list(v1.points) + list(v2.points))


def big_m(h1: HRep, h2: HRep, mode: str = "tight", rho=None) -> MipRep:
    """Rows A1 x <= b1 + M1 (1-lambda);  A2 x <= b2 + M2 lambda;  0<=lambda<=1.

    mode='tight' sets M1_i = max{a1_i x : x in P2} - b1_i per row (and
    symmetrically M2); mode='factor' loosens every nonzero entry to
    rho * |tight M|, so the relaxation widens in both directions.
    """
    if h1.dim != h2.dim:
        raise DisjunctionError("ambient dimensions differ")
    _require_nonempty_bounded(h1, "P1")
    _require_nonempty_bounded(h2, "P2")
    if mode not in ("tight", "factor"):
        raise DisjunctionError(f"unknown mode {mode!r}")
    if mode == "factor" and rho is None:
        raise DisjunctionError("factor mode needs rho")
    d = h1.dim

    def tight_m(rows_of, over):
        out = []
        for a, b in rows_of.rows():
            res = lp_solve(over.A, over.b, a, "max")
            if res.status != "optimal":
                raise DisjunctionError("internal error: unbounded big-M on bounded input")
            out.append(res.value - Rat(b))
        return out

    m1 = tight_m(h1, h2)
    m2 = tight_m(h2, h1)
    if mode == "factor":
        rho = Rat(rho)
        m1 = [rho * abs(m) for m in m1]
        m2 = [rho * abs(m) for m in m2]
    rows = []
    rhs = []
    for (a, b), m in zip(h1.rows(), m1):
        # a x <= b + m (1 - lambda)  <=>  a x + m lambda <= b + m
        rows.append(tuple(a) + (Rat(m),))
        rhs.append(Rat(b) + m)
    for (a, b), m in zip(h2.rows(), m2):
        # a x <= b + m lambda
        rows.append(tuple(a) + (-Rat(m),))
        rhs.append(Rat(b))
    lam = vzero(d) + (ONE,)
    rows.append(tuple(-x for x in lam))
    rhs.append(ZERO)
    rows.append(lam)
    rhs.append(ONE)
    rep = MipRep(HRep(tuple(rows), tuple(rhs)), d,
                 frozenset({d}), tuple(m1), tuple(m2))
    # representation property: the lambda in {0,1} slices are exactly P2, P1
    for lam_val, href in ((ONE, h1), (ZERO, h2)):
        slice_verts = vertex_enumeration(fix_lambda(rep.h, d, lam_val))
        ref_verts = vertex_enumeration(href)
        if sorted(slice_verts.points) != sorted(ref_verts.points):
            raise DisjunctionError("big-M slice does not reproduce the input polytope")
    return rep


def fix_lambda(h: HRep, lam_index: int, value) -> HRep:
    """Substitute a fixed value for one coordinate and drop it."""
    value = Rat(value)
    rows = []
    rhs = []
    for a, b in h.rows():
        rows.append(a[:lam_index] + a[lam_index + 1:])
        rhs.append(Rat(b) - a[lam_index] * value)
    keep = [(a, b) for a, b in zip(rows, rhs) if any(x != 0 for x in a)]
    for a, b in zip(rows, rhs):
        if all(x == 0 for x in a) and b < 0:
            raise PolytopeError("empty slice")
    return HRep(tuple(a for a, _ in keep), tuple(b for _, b in keep))


def convex_hull_property_check(rep, oracle: Polytope):
    """Does proj_x of the LP relaxation equal conv(P1 u P2)?

    Returns {'holds': bool, 'witness': vertex of the relaxed projection
    outside the oracle, or None}.
    """
    d = rep.d
    proj = fm_project(rep.h, range(d))
    proj_poly = polytope_from_points(vertex_enumeration(proj).points)
    if polytopes_equal_as_sets(proj_poly, oracle):
        return {"holds": True, "witness": None}
    witness = None
    for v in proj_poly.v.points:
        if not oracle.contains(v):
            witness = v
            break
    return {"holds": False, "witness": witness}


def split_disjunction(p: Polytope, pi: Vec, pi0):
    """H-reps of P ∩ {pi.x <= pi0} and P ∩ {pi.x >= pi0 + 1}."""
    pi0 = Rat(pi0)
    base = p.full_hrep()
    h0 = HRep(base.A + (tuple(pi),), base.b + (pi0,))
    h1 = HRep(base.A + (tuple(-x for x in pi),), base.b + (-(pi0 + 1),))
    return h0, h1
