"""Exact H/V representations, conversion, faces, cones and projection.

Two independent conversion routes are shipped on purpose: a brute-force
subset-enumeration oracle and a double description engine.  Tests compare
them; the rest of the package uses the engine.

Lower-dimensional polytopes are carried with explicit affine-hull equations;
faces are computed inside the hull.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from itertools import combinations

from .lp import LPError, lp_solve
from .rational import (ONE, ZERO, Rat, Vec, dot, independent_subset, is_zero_vec,
                       kernel_basis, mat_rank, rref, solve_linear, vadd, vscale,
                       vsub, vunit, vzero, centroid)


class PolytopeError(Exception):
    pass


@dataclass(frozen=True)
class HRep:
    """Inequality system A x <= b.  Equalities appear as inequality pairs."""

    A: tuple[Vec, ...]
    b: Vec

    @property
    def dim(self) -> int:
        return len(self.A[0]) if self.A else 0

    @property
    def nrows(self) -> int:
        return len(self.A)

    def rows(self):
        return list(zip(self.A, self.b))

    def contains(self, x: Vec) -> bool:
        return all(dot(a, x) <= bi for a, bi in zip(self.A, self.b))


@dataclass(frozen=True)
class VRep:
    points: tuple[Vec, ...]

    @property
    def dim(self) -> int:
        return len(self.points[0]) if self.points else 0


@dataclass(frozen=True)
class Polytope:
    """Paired irredundant H-description and minimal V-description.

    ``equations`` spans the affine hull (empty when full-dimensional);
    ``incidence`` holds, per facet row, the set of tight vertex indices.
    """

    h: HRep
    v: VRep
    equations: tuple[tuple[Vec, Rat], ...] = ()
    incidence: tuple[frozenset[int], ...] = ()

    @property
    def ambient_dim(self) -> int:
        return self.v.dim

    @property
    def dim(self) -> int:
        return point_set_dim(self.v.points)

    @property
    def n_facets(self) -> int:
        return self.h.nrows

    @property
    def n_vertices(self) -> int:
        return len(self.v.points)

    def full_hrep(self) -> HRep:
        """Facet rows plus affine-hull equations written as inequality pairs."""
        A = list(self.h.A)
        b = list(self.h.b)
        for a, beta in self.equations:
            A.append(a)
            b.append(beta)
            A.append(tuple(-x for x in a))
            b.append(-beta)
        return HRep(tuple(A), tuple(b))

    def contains(self, x: Vec) -> bool:
        return self.full_hrep().contains(x)

    def incidence_matrix(self) -> tuple[tuple[bool, ...], ...]:
        n = self.n_vertices
        return tuple(tuple(j in inc for j in range(n)) for inc in self.incidence)


@dataclass(frozen=True)
class Face:
    tight_facets: frozenset[int]
    incident_vertices: frozenset[int]
    dim: int  # -1 for the empty face


@dataclass(frozen=True)
class Cone:
    generators: tuple[Vec, ...]
    lineality: tuple[Vec, ...] = ()
    open_cone: bool = False  # True: the relative interior of the closed cone


# ---------------------------------------------------------------------------
# low-level geometry helpers


def point_set_dim(points) -> int:
    if not points:
        return -1
    p0 = points[0]
    return mat_rank([vsub(p, p0) for p in points[1:]])


def hull_equations(points) -> tuple[tuple[Vec, Rat], ...]:
    """Equations a.x = beta satisfied by all points (basis, canonical)."""
    p0 = points[0]
    diffs = [vsub(p, p0) for p in points[1:]]
    normals = kernel_basis(diffs) if diffs else kernel_basis([vzero(len(p0))])
    if not diffs:
        normals = [vunit(len(p0), i) for i in range(len(p0))]
    return tuple((a, dot(a, p0)) for a in normals)


def canon_ineq(a: Vec, beta) -> tuple[Vec, Rat]:
    """Scale inequality a.x <= beta by a positive factor so the first
    nonzero coefficient has absolute value 1."""
    for x in a:
        if x != 0:
            s = ONE / abs(x)
            return tuple(s * y for y in a), Rat(beta) * s
    raise PolytopeError("cannot canonicalize the zero inequality")


class _Chart:
    """Exact coordinates inside the affine hull of a point set."""

    def __init__(self, points):
        self.p0 = points[0]
        self.dirs = independent_subset([vsub(p, self.p0) for p in points[1:]])
        self.k = len(self.dirs)
        if self.k:
            # pivot coordinate positions where the direction matrix has full rank
            _, self.cols = rref(self.dirs)  # pivot coordinates of the k x d matrix
            # M[r][j] = dirs[j][cols[r]]; invert once
            M = [[self.dirs[j][c] for j in range(self.k)] for c in self.cols]
            self.Minv = _invert(M)

    def to_local(self, x: Vec) -> Vec:
        rhs = [x[c] - self.p0[c] for c in self.cols]
        return tuple(dot(row, rhs) for row in self.Minv)

    def to_ambient_point(self, t: Vec) -> Vec:
        x = list(self.p0)
        for j, tj in enumerate(t):
            for i in range(len(x)):
                x[i] += tj * self.dirs[j][i]
        return tuple(x)

    def to_ambient_ineq(self, n: Vec, c) -> tuple[Vec, Rat]:
        # n.t <= c with t = Minv (x_cols - p0_cols)
        w = [sum((n[j] * self.Minv[j][r] for j in range(self.k)), ZERO)
             for r in range(self.k)]
        d = len(self.p0)
        a = [ZERO] * d
        beta = Rat(c)
        for r, col in enumerate(self.cols):
            a[col] = w[r]
            beta += w[r] * self.p0[col]
        return tuple(a), beta


def _invert(M):
    k = len(M)
    aug = [list(M[i]) + list(vunit(k, i)) for i in range(k)]
    red, pivots = rref(aug)
    if pivots != list(range(k)):
        raise PolytopeError("singular chart matrix")
    return [row[k:] for row in red]


# ---------------------------------------------------------------------------
# vertex enumeration (H -> V)


def _check_bounded_nonempty(h: HRep):
    d = h.dim
    if lp_solve(h.A, h.b, vzero(d)).status != "optimal":
        raise PolytopeError("empty")
    box = []
    for i in range(d):
        hi = lp_solve(h.A, h.b, vunit(d, i), "max")
        lo = lp_solve(h.A, h.b, vunit(d, i), "min")
        if hi.status != "optimal" or lo.status != "optimal":
            raise PolytopeError("not a polytope: unbounded in a coordinate direction")
        box.append((lo.value, hi.value))
    return box


def vertex_enumeration_bruteforce(h: HRep) -> VRep:
    """Reference oracle: solve every d-subset of rows, keep feasible points."""
    _check_bounded_nonempty(h)
    d = h.dim
    rows = h.rows()
    seen = set()
    out = []
    for idx in combinations(range(len(rows)), d):
        M = [rows[i][0] for i in idx]
        rhs = [rows[i][1] for i in idx]
        if mat_rank(M) < d:
            continue
        x = solve_linear(M, rhs)
        if x is None or x in seen:
            continue
        if h.contains(x):
            seen.add(x)
            out.append(x)
    return VRep(tuple(sorted(out)))


def vertex_enumeration_dd(h: HRep) -> VRep:
    """Double description: cut a bounding box by one inequality at a time,
    tracking vertices and their tight constraint sets."""
    box = _check_bounded_nonempty(h)
    d = h.dim
    # padded enclosing simplex (d+1 facets, d+1 vertices) so the start
    # stays linear in d and its facets never touch the polytope
    lo = [l - 1 for l, _ in box]
    s = sum(hi for _, hi in box) + 1
    normals: list[Vec] = [tuple(ONE for _ in range(d))]
    rhs: list[Rat] = [Rat(s)]
    for i in range(d):
        normals.append(vunit(d, i, -1))
        rhs.append(-Rat(lo[i]))
    verts: list[Vec] = [tuple(Rat(x) for x in lo)]
    for i in range(d):
        v = list(lo)
        v[i] = s - (sum(lo) - lo[i])
        verts.append(tuple(Rat(x) for x in v))
    tight: list[set[int]] = [
        {j for j in range(d + 1) if dot(normals[j], v) == rhs[j]}
        for v in verts]

    for a, beta in h.rows():
        cid = len(normals)
        normals.append(a)
        rhs.append(Rat(beta))
        slack = [Rat(beta) - dot(a, v) for v in verts]
        if all(s >= 0 for s in slack):
            for i, s in enumerate(slack):
                if s == 0:
                    tight[i].add(cid)
            continue
        keep = [i for i, s in enumerate(slack) if s >= 0]
        cut = [i for i, s in enumerate(slack) if s < 0]
        new_pts = {}
        for i in keep:
            if slack[i] == 0:
                continue
            for j in cut:
                common = tight[i] & tight[j]
                if len(common) < d - 1:
                    continue
                if mat_rank([normals[t] for t in common]) != d - 1:
                    continue
                lam = slack[i] / (slack[i] - slack[j])
                w = vadd(verts[i], vscale(lam, vsub(verts[j], verts[i])))
                if w not in new_pts:
                    new_pts[w] = {t for t in range(cid + 1)
                                  if dot(normals[t], w) == rhs[t]}
        verts2, tight2 = [], []
        for i in keep:
            if slack[i] == 0:
                tight[i].add(cid)
            verts2.append(verts[i])
            tight2.append(tight[i])
        for w, tw in new_pts.items():
            if w not in verts2:
                verts2.append(w)
                tight2.append(tw)
        verts, tight = verts2, tight2

    return VRep(tuple(sorted(verts)))


def vertex_enumeration(h: HRep) -> VRep:
    return vertex_enumeration_dd(h)


# ---------------------------------------------------------------------------
# facet enumeration (V -> H)


def _facets_fulldim_bruteforce(points, k):
    """All supporting hyperplanes through k affinely independent points,
    inside a k-dimensional coordinate space."""
    out = {}
    for idx in combinations(range(len(points)), k):
        pts = [points[i] for i in idx]
        diffs = [vsub(p, pts[0]) for p in pts[1:]]
        if mat_rank(diffs) != k - 1:
            continue
        ker = kernel_basis(diffs) if diffs else [vunit(k, i) for i in range(k)]
        if len(ker) != 1:
            continue
        n = ker[0]
        beta = dot(n, pts[0])
        lo = hi = False
        for p in points:
            s = dot(n, p) - beta
            if s > 0:
                hi = True
            elif s < 0:
                lo = True
            if hi and lo:
                break
        if hi and lo:
            continue
        if hi:
            n, beta = tuple(-x for x in n), -beta
        out[canon_ineq(n, beta)] = True
    return sorted(out)


def _facets_fulldim_dd(points, k):
    """Polar route: facets of conv(points) are the vertices of the polar."""
    c = centroid(points)
    rows = [vsub(p, c) for p in points]
    pol = vertex_enumeration_dd(HRep(tuple(rows), tuple(ONE for _ in rows)))
    out = {}
    for y in pol.points:
        # y.(x - c) <= 1
        out[canon_ineq(y, ONE + dot(y, c))] = True
    return sorted(out)


def _facet_enumeration(points, engine):
    points = list(points)
    eqs = []
    amb = len(points[0])
    dim = point_set_dim(points)
    if dim < amb:
        eqs = list(hull_equations(points))
    if dim == 0:
        return [], eqs
    chart = _Chart(points) if dim < amb else None
    local = [chart.to_local(p) for p in points] if chart else points
    local_facets = engine(local, dim)
    rows = []
    for n, c in local_facets:
        if chart:
            rows.append(canon_ineq(*chart.to_ambient_ineq(n, c)))
        else:
            rows.append((n, c))
    return sorted(rows), eqs


def facet_enumeration_bruteforce(v: VRep):
    rows, eqs = _facet_enumeration(v.points, _facets_fulldim_bruteforce)
    return HRep(tuple(r[0] for r in rows), tuple(r[1] for r in rows)), tuple(eqs)


def facet_enumeration(v: VRep):
    """Irredundant H-description of conv(points) plus affine-hull equations."""
    if not v.points:
        raise PolytopeError("empty point list")
    rows, eqs = _facet_enumeration(v.points, _facets_fulldim_dd)
    return HRep(tuple(r[0] for r in rows), tuple(r[1] for r in rows)), tuple(eqs)


# ---------------------------------------------------------------------------
# paired representations


def polytope_from_points(points) -> Polytope:
    points = [tuple(Rat(x) for x in p) for p in points]
    h, eqs = facet_enumeration(VRep(tuple(points)))
    d = len(points[0])
    eq_normals = [a for a, _ in eqs]
    verts = []
    for p in set(points):
        tightn = [a for a, beta in h.rows() if dot(a, p) == beta]
        if mat_rank(tightn + eq_normals) == d:
            verts.append(p)
    verts = sorted(verts)
    inc = tuple(frozenset(j for j, p in enumerate(verts) if dot(a, p) == beta)
                for a, beta in h.rows())
    return Polytope(h, VRep(tuple(verts)), eqs, inc)


def polytope_from_hrep(h: HRep, strict: bool = True) -> Polytope:
    """Pair an H-description with its vertices, keeping the input row order.

    With strict=True every input row must define a facet (and duplicates are
    rejected); otherwise non-facet rows are dropped.
    """
    verts = vertex_enumeration(h)
    pdim = point_set_dim(verts.points)
    rows = []
    inc = []
    seen = set()
    for ridx, (a, beta) in enumerate(h.rows()):
        t = frozenset(j for j, p in enumerate(verts.points) if dot(a, p) == beta)
        is_facet = bool(t) and point_set_dim([verts.points[j] for j in t]) == pdim - 1
        key = canon_ineq(a, beta) if not is_zero_vec(a) else None
        if is_facet and key in seen:
            is_facet = False  # duplicate of an earlier facet row
        if not is_facet:
            if strict:
                raise PolytopeError(f"row {ridx} does not define a facet")
            continue
        seen.add(key)
        rows.append((a, beta))
        inc.append(t)
    eqs = hull_equations(verts.points) if pdim < h.dim else ()
    return Polytope(HRep(tuple(r[0] for r in rows), tuple(r[1] for r in rows)),
                    verts, tuple(eqs), tuple(inc))


def check_polytope(p: Polytope):
    """Cross-check that the H- and V-descriptions agree (both containments)."""
    full = p.full_hrep()
    for v in p.v.points:
        if not full.contains(v):
            raise PolytopeError("vertex violates H-description")
    hv = vertex_enumeration(full)
    if sorted(hv.points) != sorted(p.v.points):
        raise PolytopeError("H-description has different vertices")


# ---------------------------------------------------------------------------
# faces


def all_faces(p: Polytope) -> dict[frozenset[int], frozenset[int]]:
    """Every nonempty face as vertexset -> tight facet set, via closure of
    facet-incidence intersections."""
    n = p.n_vertices
    top = frozenset(range(n))
    faces = {top}
    queue = [top]
    while queue:
        f = queue.pop()
        for inc in p.incidence:
            g = f & inc
            if g and g not in faces:
                faces.add(g)
                queue.append(g)
    return {f: frozenset(i for i, inc in enumerate(p.incidence) if f <= inc)
            for f in faces}


def face_dim(p: Polytope, vertexset) -> int:
    return point_set_dim([p.v.points[j] for j in vertexset])


def faces_of_dim(p: Polytope, k: int) -> list[Face]:
    pdim = p.dim
    if k < -1 or k > pdim:
        raise PolytopeError(f"face dimension {k} out of range [-1, {pdim}]")
    if k == -1:
        return [Face(frozenset(range(p.n_facets)), frozenset(), -1)]
    out = []
    for vs, tf in all_faces(p).items():
        if face_dim(p, vs) == k:
            out.append(Face(tf, vs, k))
    return sorted(out, key=lambda f: sorted(f.incident_vertices))


def face_of_vertices(p: Polytope, vertexset) -> Face:
    vs = frozenset(vertexset)
    tf = frozenset(i for i, inc in enumerate(p.incidence) if vs <= inc)
    return Face(tf, vs, face_dim(p, vs))


# ---------------------------------------------------------------------------
# optimality cones


def _lineality(p: Polytope) -> tuple[Vec, ...]:
    # C_P(P): directions along which the polytope is flat
    v0 = p.v.points[0]
    diffs = [vsub(v, v0) for v in p.v.points[1:]]
    if not diffs:
        return tuple(vunit(p.ambient_dim, i) for i in range(p.ambient_dim))
    return tuple(kernel_basis(diffs))


def optimality_cone_closed(p: Polytope, f: Face) -> Cone:
    if not f.incident_vertices:
        raise PolytopeError("empty face has no optimality cone")
    gens = tuple(p.h.A[i] for i in sorted(f.tight_facets))
    return Cone(gens, _lineality(p), open_cone=False)


def optimality_cone(p: Polytope, f: Face) -> Cone:
    c = optimality_cone_closed(p, f)
    return Cone(c.generators, c.lineality, open_cone=True)


def cone_dim(c: Cone) -> int:
    return mat_rank(list(c.generators) + list(c.lineality))


def maximizing_face(p: Polytope, c: Vec) -> Face:
    vals = [dot(c, v) for v in p.v.points]
    best = max(vals)
    return face_of_vertices(p, {j for j, x in enumerate(vals) if x == best})


def in_optimality_cone(p: Polytope, f: Face, c: Vec) -> bool:
    """c in C_P(F): the face of P maximizing c is exactly F."""
    return maximizing_face(p, c).incident_vertices == f.incident_vertices


# ---------------------------------------------------------------------------
# projection


def remove_redundant_rows(rows: list[tuple[Vec, Rat]],
                          z: Vec | None = None) -> list[tuple[Vec, Rat]]:
    """Drop rows implied by the rest; keeps set equality, output irredundant.

    Uses Clarkson's output-sensitive scheme (candidate LPs over the small
    essential set plus ray shooting from an interior point) when the system
    has a strictly interior point, else one LP per row against the rest.
    A caller holding a strictly feasible z may pass it to skip the
    interior-point LP."""
    canon = []
    seen = set()
    for a, beta in rows:
        if is_zero_vec(a):
            if beta < 0:
                raise PolytopeError("inconsistent system (0 <= negative)")
            continue
        key = canon_ineq(a, beta)
        if key not in seen:
            seen.add(key)
            canon.append(key)
    if len(canon) <= 2:
        return canon
    if z is not None and not all(dot(a, z) < b for a, b in canon):
        z = None
    if z is None:
        try:
            z = interior_point(HRep(tuple(r[0] for r in canon),
                                    tuple(r[1] for r in canon)))
        except (PolytopeError, LPError):
            z = None
    if z is not None:
        return _remove_redundant_clarkson(canon, z)
    return _remove_redundant_pairwise(canon)


def _remove_redundant_pairwise(canon):
    i = 0
    while i < len(canon):
        others = canon[:i] + canon[i + 1:]
        if not others:
            break
        a, beta = canon[i]
        res = lp_solve([r[0] for r in others], [r[1] for r in others], a, "max")
        if res.status == "optimal" and res.value <= beta:
            del canon[i]
        else:
            i += 1
    return canon


def _remove_redundant_clarkson(canon, z):
    n = len(canon)
    essential: list[int] = []
    in_essential = [False] * n
    discarded = [False] * n

    def first_hit(x):
        # first constraint pierced by the segment z -> x
        d = vsub(x, z)
        best_t, best_j = None, None
        for j, (aj, bj) in enumerate(canon):
            if discarded[j]:
                continue
            s = dot(aj, d)
            if s <= 0:
                continue
            t = (bj - dot(aj, z)) / s
            if best_t is None or t < best_t:
                best_t, best_j = t, j
        return best_j

    for i in range(n):
        if in_essential[i]:
            continue
        a, beta = canon[i]
        while not in_essential[i]:
            A = [canon[j][0] for j in essential] + [a]
            b = [canon[j][1] for j in essential] + [beta + ONE]
            res = lp_solve(A, b, a, "max")
            if res.status != "optimal":  # pragma: no cover - clipped LP
                raise PolytopeError("internal error: clipped LP did not solve")
            if res.value <= beta:
                discarded[i] = True
                break
            j = first_hit(res.point)
            if j is None:  # pragma: no cover - z is strictly interior
                raise PolytopeError("internal error: ray shooting found no row")
            essential.append(j)
            in_essential[j] = True
    # degenerate ray hits can admit weakly redundant rows; final cleanup
    return _remove_redundant_pairwise([canon[j] for j in sorted(essential)])


def _fm_eliminate(rows, col):
    """One elimination step, keeping full row width (the column is zeroed
    arithmetically, not deleted)."""
    pos, neg, zero = [], [], []
    for row in rows:
        c = row[0][col]
        (pos if c > 0 else neg if c < 0 else zero).append(row)
    out = list(zero)
    for ap, bp in pos:
        for an, bn in neg:
            f_p, f_n = -an[col], ap[col]
            a = tuple(f_p * x + f_n * y for x, y in zip(ap, an))
            b = f_p * bp + f_n * bn
            if is_zero_vec(a):
                if b < 0:
                    raise PolytopeError("inconsistent system (0 <= negative)")
                continue
            out.append(canon_ineq(a, b))
    return out


def _fm_pick_column(rows, drop):
    def cost(col):
        p = sum(1 for a, _ in rows if a[col] > 0)
        n = sum(1 for a, _ in rows if a[col] < 0)
        return p * n - p - n
    return min(drop, key=cost)


def fm_project(h: HRep, keep, force_fm: bool = False) -> HRep:
    """Orthogonal projection onto the coordinates in `keep` (sorted order).

    Fourier-Motzkin with LP redundancy removal after each elimination; for
    more than 6 eliminated variables the vertex-projection + hull route is
    used instead (both describe the same set).
    """
    keep = sorted(set(keep))
    drop = [i for i in range(h.dim) if i not in keep]
    if not drop:
        return HRep(h.A, h.b)
    if len(drop) > 6 and not force_fm:
        verts = vertex_enumeration(h)
        pts = [tuple(p[i] for i in keep) for p in verts.points]
        hr, eqs = facet_enumeration(VRep(tuple(sorted(set(pts)))))
        A = list(hr.A)
        b = list(hr.b)
        for a, beta in eqs:
            A.append(a)
            b.append(beta)
            A.append(tuple(-x for x in a))
            b.append(-beta)
        return HRep(tuple(A), tuple(b))
    rows = [(a, Rat(bi)) for a, bi in h.rows()]
    try:
        # strictly feasible for every positive row combination downstream
        z = interior_point(h)
    except (PolytopeError, LPError):
        z = None
    remaining = list(drop)
    while remaining:
        col = _fm_pick_column(rows, remaining)
        remaining.remove(col)
        rows = remove_redundant_rows(_fm_eliminate(rows, col), z)
    out = [(tuple(a[i] for i in keep), b) for a, b in rows]
    return HRep(tuple(r[0] for r in out), tuple(r[1] for r in out))


# ---------------------------------------------------------------------------
# comparisons


def combinatorial_equal(p: Polytope, q: Polytope, facet_bijection) -> bool:
    """True iff some vertex bijection makes the incidence matrices equal
    under the given facet map (p facet i <-> q facet facet_bijection[i])."""
    if p.n_facets != q.n_facets:
        raise PolytopeError("facet counts differ")
    fmap = dict(enumerate(facet_bijection)) if not isinstance(facet_bijection, dict) \
        else dict(facet_bijection)
    if sorted(fmap) != list(range(p.n_facets)) or sorted(fmap.values()) != list(range(q.n_facets)):
        raise PolytopeError("facet bijection is not total")
    if p.n_vertices != q.n_vertices:
        return False
    psig = sorted(sorted(i for i, inc in enumerate(p.incidence) if j in inc)
                  for j in range(p.n_vertices))
    inv = {v: k for k, v in fmap.items()}
    qsig = sorted(sorted(inv[i] for i, inc in enumerate(q.incidence) if j in inc)
                  for j in range(q.n_vertices))
    return psig == qsig


def find_combinatorial_bijection(p: Polytope, q: Polytope):
    """Facet bijection witnessing combinatorial equality, or None.  Searches
    permutations within incidence-size classes; meant for small facet counts."""
    if p.n_facets != q.n_facets or p.n_vertices != q.n_vertices:
        return None
    by_size_p: dict[int, list[int]] = {}
    by_size_q: dict[int, list[int]] = {}
    for i, inc in enumerate(p.incidence):
        by_size_p.setdefault(len(inc), []).append(i)
    for i, inc in enumerate(q.incidence):
        by_size_q.setdefault(len(inc), []).append(i)
    if {k: len(v) for k, v in by_size_p.items()} != \
            {k: len(v) for k, v in by_size_q.items()}:
        return None
    total = 1
    for v in by_size_p.values():
        total *= math.factorial(len(v))
    if total > 50000:
        raise PolytopeError("facet classes too large for bijection search")
    sizes = sorted(by_size_p)
    for perms in itertools.product(
            *(itertools.permutations(by_size_q[s]) for s in sizes)):
        fmap = {}
        for s, perm in zip(sizes, perms):
            fmap.update(zip(by_size_p[s], perm))
        if combinatorial_equal(p, q, fmap):
            return [fmap[i] for i in range(p.n_facets)]
    return None


def random_polytope(rng, d: int, npoints: int = 0) -> Polytope:
    """Full-dimensional polytope from seeded random small-rational points."""
    npoints = npoints or d + 3
    while True:
        pts = [tuple(Rat(rng.randint(-9, 9), rng.randint(1, 4))
                     for _ in range(d)) for _ in range(npoints)]
        if point_set_dim(pts) == d:
            return polytope_from_points(pts)


def polytopes_equal_as_sets(p: Polytope, q: Polytope) -> bool:
    return sorted(p.v.points) == sorted(q.v.points)


def affine_dim(obj) -> int:
    """Affine dimension of an HRep, VRep or Polytope (-1 when empty)."""
    if isinstance(obj, Polytope):
        return obj.dim
    if isinstance(obj, VRep):
        return point_set_dim(obj.points)
    try:
        verts = vertex_enumeration(obj)
    except PolytopeError as e:
        if "empty" in str(e):
            return -1
        raise
    return point_set_dim(verts.points)


def interior_point(h: HRep) -> Vec:
    """Max-slack interior point of a full-dimensional bounded system."""
    d = h.dim
    A = [tuple(a) + (ONE,) for a in h.A]
    b = list(h.b)
    obj = vzero(d) + (ONE,)
    res = lp_solve(A, b, obj, "max")
    if res.status != "optimal" or res.value <= 0:
        raise PolytopeError("no interior point (empty or lower-dimensional)")
    return res.point[:d]
