"""The named polyhedral constructions: moment curve, cyclic polytopes and
their centered polars, facet colorings, the avoided subspace, perturbed
polars, Cayley embeddings with colorful facet certificates, the
cross-polytope family, homogenization, and the lift-and-project instance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

from .lp import lp_solve
from .polytope import (Cone, Face, HRep, Polytope, PolytopeError, VRep,
                       canon_ineq, combinatorial_equal, face_of_vertices,
                       faces_of_dim, interior_point, point_set_dim,
                       polytope_from_hrep, polytope_from_points,
                       vertex_enumeration)
from .rational import (ONE, ZERO, Rat, Vec, centroid, dot, is_zero_vec,
                       kernel_basis, mat_rank, rat, vadd, vscale, vsub, vunit,
                       vzero)


class ConstructionError(Exception):
    pass


class CertificateError(ConstructionError):
    pass


@dataclass(frozen=True)
class ColoredHRep:
    """d^2 facet rows split into d/2 color classes of 2d rows each."""

    h: HRep
    color: tuple[int, ...]  # per row, class index in 0..d/2-1

    @property
    def n_classes(self) -> int:
        return max(self.color) + 1

    def class_rows(self, j: int) -> list[int]:
        return [i for i, c in enumerate(self.color) if c == j]


@dataclass(frozen=True)
class PerturbationData:
    """Avoided subspace basis, centered simplex vectors u_j in it, the
    positive relint witness (sum nu_j u_j = 0, sum nu_j = 1), and how many
    halvings were applied to u."""

    v_basis: tuple[Vec, ...]
    u: tuple[Vec, ...]
    nu: tuple[Rat, ...]
    scale_exponent: int = 0

    def halved(self) -> "PerturbationData":
        half = rat(1, 2)
        return replace(self, u=tuple(vscale(half, uj) for uj in self.u),
                       scale_exponent=self.scale_exponent + 1)


@dataclass(frozen=True)
class CayleyCertificate:
    """Facet certificate (r, alpha) for the Cayley embedding of a colorful
    face pair; beta0 is the shared right-hand side."""

    colorful_indices: tuple[int, ...]
    r: Vec
    alpha: Rat
    beta0: Rat
    mu: tuple[Rat, ...]
    tight_lower: frozenset[int]  # vertex indices of the height-0 polytope
    tight_upper: frozenset[int]  # vertex indices of the height-1 polytope


# ---------------------------------------------------------------------------
# cyclic polytopes and polars


def moment_curve_point(t, d: int) -> Vec:
    if d < 1:
        raise ConstructionError("dimension must be >= 1")
    t = rat(t)
    out = []
    p = ONE
    for _ in range(d):
        p = p * t
        out.append(p)
    return tuple(out)


def cyclic_polytope(d: int, k: int, t=None) -> Polytope:
    if k < d + 1:
        raise ConstructionError(f"need at least d+1 = {d + 1} parameters, got {k}")
    ts = [rat(x) for x in t] if t is not None else [rat(i) for i in range(1, k + 1)]
    if len(ts) != k:
        raise ConstructionError(f"expected {k} parameters, got {len(ts)}")
    if len(set(ts)) != k:
        raise ConstructionError("moment curve parameters must be pairwise distinct")
    return polytope_from_points([moment_curve_point(x, d) for x in ts])


def centered_polar(p: Polytope) -> Polytope:
    """Translate so the vertex centroid is the origin, then polarize.
    One facet per input vertex, in vertex order."""
    if p.equations:
        raise ConstructionError("polar needs a full-dimensional polytope")
    c = centroid(p.v.points)
    rows = tuple(vsub(v, c) for v in p.v.points)
    h = HRep(rows, tuple(ONE for _ in rows))
    if interior_point(h) is None:  # pragma: no cover - LP raises instead
        raise ConstructionError("origin not interior after centering")
    return polytope_from_hrep(h, strict=True)


def color_facets(h: HRep) -> ColoredHRep:
    """Deterministic coloring: class j gets rows j*2d .. (j+1)*2d - 1."""
    d = h.dim
    if d % 2 != 0:
        raise ConstructionError("coloring needs even dimension")
    if h.nrows != d * d:
        raise ConstructionError(f"expected d^2 = {d * d} rows, got {h.nrows}")
    per = 2 * d
    color = tuple(i // per for i in range(h.nrows))
    return ColoredHRep(h, color)


# ---------------------------------------------------------------------------
# the avoided subspace and the perturbation simplex


def _closed_cone_span(p: Polytope, f: Face) -> list[Vec]:
    return [p.h.A[i] for i in sorted(f.tight_facets)]


def lemma4_subspace(p: Polytope, k: int) -> list[Vec]:
    """Basis v_1..v_k with span(v) meeting aff(closed cone of F) only at 0,
    for every k-face F.  Candidates are tried from the moment-curve sequence
    x(1), x(2), ...; the rank condition is re-verified before returning."""
    d = p.ambient_dim
    if p.equations or p.dim != d:
        raise ConstructionError("need a full-dimensional polytope")
    if k < 0 or k > d:
        raise ConstructionError(f"k = {k} out of range")
    if k == 0:
        return []
    faces = faces_of_dim(p, k)
    spans = [_span_basis(_closed_cone_span(p, f)) for f in faces]
    basis: list[Vec] = []
    cap = 10 * d * max(1, len(faces))
    t = 0
    while len(basis) < k:
        t += 1
        if t > cap:
            raise ConstructionError("candidate sequence exhausted")
        v = moment_curve_point(t, d)
        if all(mat_rank(sb + basis + [v]) == len(sb) + len(basis) + 1
               for sb in spans):
            basis.append(v)
    for sb in spans:
        if mat_rank(sb + basis) != len(sb) + k:
            raise ConstructionError("internal error: rank re-check failed")
    return basis


def _span_basis(vectors):
    out = []
    for v in vectors:
        if mat_rank(out + [v]) > len(out):
            out.append(v)
    return out


def centered_simplex_in_subspace(v_basis) -> PerturbationData:
    """u_j = b_j - mean(b); conv(u) is an (m-1)-simplex with 0 in its
    relative interior, witnessed by nu_j = 1/m."""
    m = len(v_basis)
    if m < 1:
        raise ConstructionError("need at least one basis vector")
    if mat_rank(list(v_basis)) != m:
        raise ConstructionError("basis vectors are dependent")
    c = centroid(list(v_basis))
    u = tuple(vsub(b, c) for b in v_basis)
    if m > 1:
        diffs = [vsub(uj, u[0]) for uj in u[1:]]
        if mat_rank(diffs) != m - 1:
            raise ConstructionError("u vectors are not affinely independent")
    nu = tuple(rat(1, m) for _ in range(m))
    return PerturbationData(tuple(v_basis), u, nu)


# ---------------------------------------------------------------------------
# perturbed polar and Cayley certificates

SCALING_CAP = 64


def _is_simple(p: Polytope) -> bool:
    d = p.dim
    counts = [0] * p.n_vertices
    for inc in p.incidence:
        for j in inc:
            counts[j] += 1
    return all(c == d for c in counts)


def perturbed_polar(dc: ColoredHRep, pert: PerturbationData):
    """{x : (a^i_j + u_j) x <= 1}, with u halved until the result is
    combinatorially equal to the unperturbed polytope (identity facet map)."""
    dpoly = polytope_from_hrep(dc.h, strict=True)
    if dpoly.equations:
        raise ConstructionError("polar must be full-dimensional")
    if not _is_simple(dpoly):
        raise ConstructionError("perturbation requires a simple polytope")
    for uj in pert.u:
        if not _in_span(uj, pert.v_basis):
            raise ConstructionError("u vector outside the subspace")
    current = pert
    for _ in range(SCALING_CAP + 1):
        rows = tuple(vadd(a, current.u[dc.color[i]]) for i, a in enumerate(dc.h.A))
        h = HRep(rows, dc.h.b)
        try:
            q = polytope_from_hrep(h, strict=True)
        except PolytopeError:
            current = current.halved()
            continue
        if not q.equations and combinatorial_equal(dpoly, q, list(range(dpoly.n_facets))):
            return q, current
        current = current.halved()
    raise ConstructionError("scaling cap reached without combinatorial equality")


def _in_span(v: Vec, basis) -> bool:
    if is_zero_vec(v):
        return True
    return mat_rank(list(basis) + [v]) == mat_rank(list(basis))


def cayley_embedding(v0: VRep, v1: VRep) -> Polytope:
    """Hull of v0 at height 0 and v1 at height 1 in one extra coordinate."""
    if not v0.points or not v1.points:
        raise ConstructionError("empty input")
    if v0.dim != v1.dim:
        raise ConstructionError("ambient dimensions differ")
    pts = [p + (ZERO,) for p in v0.points] + [p + (ONE,) for p in v1.points]
    return polytope_from_points(pts)


def colorful_faces(dc: ColoredHRep, dpoly: Polytope) -> list[tuple[int, ...]]:
    """All tuples picking one facet per color class; each intersection is
    verified to be a nonempty face of dimension d/2."""
    d = dc.h.dim
    classes = [dc.class_rows(j) for j in range(dc.n_classes)]
    tuples = sorted(itertools.product(*classes))
    for tup in tuples:
        common = frozenset(range(dpoly.n_vertices))
        for i in tup:
            common &= dpoly.incidence[i]
        if not common:
            raise ConstructionError(f"colorful tuple {tup} has empty intersection")
        if point_set_dim([dpoly.v.points[j] for j in common]) != d // 2:
            raise ConstructionError(f"colorful tuple {tup} is not a (d/2)-face")
    return [tuple(t) for t in tuples]


def colorful_facet_certificate(dpoly: Polytope, qpoly: Polytope,
                               dc: ColoredHRep, pert: PerturbationData,
                               tup) -> CayleyCertificate:
    """Certificate that the Cayley embedding of the colorful face pair is a
    facet: r = sum_j mu_j a^{i_j}_j with mu = nu, alpha from the two support
    values, tight set checked exactly."""
    m = len(tup)
    if len({dc.color[i] for i in tup}) != m or m != dc.n_classes:
        raise CertificateError("tuple is not colorful")
    mu = pert.nu
    r = vzero(dpoly.ambient_dim)
    for j, i in enumerate(tup):
        r = vadd(r, vscale(mu[j], dpoly.h.A[i]))
    res0 = lp_solve(dpoly.h.A, dpoly.h.b, r, "max")
    res1 = lp_solve(qpoly.h.A, qpoly.h.b, r, "max")
    beta0 = res0.value
    alpha = beta0 - res1.value

    tight0 = frozenset(j for j, v in enumerate(dpoly.v.points) if dot(r, v) == beta0)
    tight1 = frozenset(j for j, v in enumerate(qpoly.v.points) if dot(r, v) == res1.value)
    face0 = frozenset.intersection(*(dpoly.incidence[i] for i in tup))
    face1 = frozenset.intersection(*(qpoly.incidence[i] for i in tup))
    if tight0 != face0 or tight1 != face1:
        raise CertificateError(
            f"certificate failed for {tup}: maximizer is not the colorful face")

    lifted = [dpoly.v.points[j] + (ZERO,) for j in sorted(tight0)] + \
             [qpoly.v.points[j] + (ONE,) for j in sorted(tight1)]
    if point_set_dim(lifted) != dpoly.ambient_dim:
        raise CertificateError(f"certificate failed for {tup}: tight set is not a facet")
    return CayleyCertificate(tuple(tup), r, alpha, beta0, tuple(mu),
                             tight0, tight1)


def certificate_inequality(cert: CayleyCertificate):
    """(r, alpha) . (x, x_last) <= beta0 as an ambient inequality."""
    return cert.r + (cert.alpha,), cert.beta0


def verify_certificate_on_cayley(cert: CayleyCertificate, dpoly: Polytope,
                                 qpoly: Polytope):
    """Exact validity + tightness of the certificate over every lifted vertex."""
    a, beta = certificate_inequality(cert)
    expect_tight = {dpoly.v.points[j] + (ZERO,) for j in cert.tight_lower} | \
                   {qpoly.v.points[j] + (ONE,) for j in cert.tight_upper}
    for p in dpoly.v.points:
        _check_vertex(a, beta, p + (ZERO,), expect_tight)
    for p in qpoly.v.points:
        _check_vertex(a, beta, p + (ONE,), expect_tight)


def _check_vertex(a, beta, x, expect_tight):
    s = dot(a, x)
    if s > beta:
        raise CertificateError("certificate inequality violated by a vertex")
    if (s == beta) != (x in expect_tight):
        raise CertificateError("tightness set mismatch")


def build_colored_polar(d: int):
    """D^Cy(d, d^2) with its deterministic coloring: returns
    (polytope, colored H-rep)."""
    if d % 2 != 0 or d < 2:
        raise ConstructionError("need even d >= 2")
    dpoly = centered_polar(cyclic_polytope(d, d * d))
    return dpoly, color_facets(dpoly.h)


def build_construction(d: int):
    """The full pipeline of the main construction for even d: returns
    (D-polytope, colored rows, Q-polytope, final perturbation data)."""
    dpoly, dc = build_colored_polar(d)
    basis = lemma4_subspace(dpoly, d // 2)
    pert = centered_simplex_in_subspace(basis)
    qpoly, pert = perturbed_polar(dc, pert)
    return dpoly, dc, qpoly, pert


# ---------------------------------------------------------------------------
# cross-polytope family (the approximation lower-bound instances)


def cross_polytope_family(d: int):
    """{Q: the cross-polytope, P1, Pm1: its two parallel simplex facets}."""
    if d < 1:
        raise ConstructionError("need d >= 1")
    rows = tuple(tuple(rat(s) for s in signs)
                 for signs in itertools.product((-1, 1), repeat=d))
    b = tuple(ONE for _ in rows)
    verts = sorted([vunit(d, i) for i in range(d)] +
                   [vunit(d, i, -1) for i in range(d)])
    inc = tuple(frozenset(j for j, v in enumerate(verts) if dot(a, v) == ONE)
                for a in rows)
    q = Polytope(HRep(rows, b), VRep(tuple(verts)), (), inc)
    p1 = polytope_from_points([vunit(d, i) for i in range(d)])
    pm1 = polytope_from_points([vunit(d, i, -1) for i in range(d)])
    return {"Q": q, "P1": p1, "Pm1": pm1}


def point_family_S(d: int, delta) -> list[Vec]:
    """All 2^d sign patterns of the vector with entries (1+delta)/d."""
    delta = rat(delta)
    if delta <= 0:
        raise ConstructionError("delta must be positive")
    if d > 20:
        raise ConstructionError("d too large for full enumeration")
    mag = (ONE + delta) / rat(d)
    return [tuple(rat(s) * mag for s in signs)
            for signs in itertools.product((-1, 1), repeat=d)]


# ---------------------------------------------------------------------------
# homogenization and the lift-and-project instance


def homogenization(q: VRep, apex: Vec) -> HRep:
    """H-rep of apex + cone{x - apex : x in Q}: one inequality per facet of
    the (d-1)-polytope Q, each lifted through the apex."""
    pts = list(q.points)
    d = len(apex)
    if point_set_dim(pts) != d - 1:
        raise ConstructionError("homogenization input must be a (d-1)-polytope")
    diffs = [vsub(p, pts[0]) for p in pts[1:]]
    if mat_rank(diffs + [vsub(apex, pts[0])]) == mat_rank(diffs):
        raise ConstructionError("apex lies in the affine hull")
    qpoly = polytope_from_points(pts)
    rows = []
    rhs = []
    for inc in qpoly.incidence:
        span = [vsub(qpoly.v.points[j], apex) for j in sorted(inc)]
        ker = kernel_basis(span)
        if len(ker) != 1:
            raise ConstructionError("internal error: facet span defect")
        n = ker[0]
        beta = dot(n, apex)
        # orient so that Q is on the <= side
        side = None
        for p in qpoly.v.points:
            s = dot(n, p) - beta
            if s != 0:
                side = s
                break
        if side is None:
            raise ConstructionError("internal error: degenerate facet lift")
        if side > 0:
            n, beta = tuple(-x for x in n), -beta
        n, beta = canon_ineq(n, beta)
        rows.append(n)
        rhs.append(beta)
    return HRep(tuple(rows), tuple(rhs))


def bounded_slice(h: HRep, extra_rows) -> Polytope:
    """Intersect a cone H-rep with extra inequalities and pair descriptions;
    the helper for inspecting homogenizations on a bounded window."""
    A = list(h.A)
    b = list(h.b)
    for a, beta in extra_rows:
        A.append(tuple(rat(x) for x in a))
        b.append(rat(beta))
    return polytope_from_hrep(HRep(tuple(A), tuple(b)), strict=False)


EPSILON_CAP = 64


@dataclass(frozen=True)
class LiftProjectInstance:
    p: Polytope
    p0: Polytope  # D^Cy(d-1, (d-1)^2), the x_d = 0 face before normalization
    p1: Polytope  # Q^Cy(d-1, (d-1)^2), the x_d = 1 face before normalization
    dc: ColoredHRep
    pert: PerturbationData
    epsilon: Rat
    scale: tuple[Vec, Vec]  # per-coordinate (multiplier, offset) for x -> scaled x


def lift_project_instance(d: int) -> LiftProjectInstance:
    """P in [0,1]^d whose x_d in {0,1} faces are the polar cyclic polytope
    and its perturbation; 2(d-1)^2 + 2 facets."""
    if d < 3 or d % 2 == 0:
        raise ConstructionError("need odd d >= 3")
    e = d - 1
    p0, dc, p1, pert = build_construction(e)

    x0 = interior_point(p0.h)
    x1 = interior_point(p1.h)
    lower = [p + (ZERO,) for p in p0.v.points]
    upper = [p + (ONE,) for p in p1.v.points]

    eps = ONE
    h0 = h1 = None
    for _ in range(EPSILON_CAP + 1):
        apex0 = x0 + (-eps,)
        apex1 = x1 + (ONE + eps,)
        h0 = homogenization(VRep(tuple(lower)), apex0)
        h1 = homogenization(VRep(tuple(upper)), apex1)
        strict0 = all(dot(a, v) < b for v in upper for a, b in h0.rows())
        strict1 = all(dot(a, v) < b for v in lower for a, b in h1.rows())
        if strict0 and strict1:
            break
        eps = eps / 2
    else:
        raise ConstructionError("epsilon not found")

    A = list(h0.A) + list(h1.A)
    b = list(h0.b) + list(h1.b)
    A.append(vunit(d, d - 1, -1))
    b.append(ZERO)
    A.append(vunit(d, d - 1))
    b.append(ONE)
    raw = polytope_from_hrep(HRep(tuple(A), tuple(b)), strict=True)

    # scale/translate the first d-1 coordinates into [0,1]
    mult = []
    off = []
    for i in range(d - 1):
        lo = min(v[i] for v in raw.v.points)
        hi = max(v[i] for v in raw.v.points)
        mult.append(ONE / (hi - lo))
        off.append(-lo / (hi - lo))
    mult.append(ONE)
    off.append(ZERO)
    scaled_pts = [tuple(mult[i] * v[i] + off[i] for i in range(d)) for v in raw.v.points]
    # transform the inequalities directly so row order (and facet count) is kept
    rows = []
    rhs = []
    for a, beta in raw.h.rows():
        a2 = tuple(a[i] / mult[i] for i in range(d))
        beta2 = beta + sum((a[i] * off[i] / mult[i] for i in range(d)), ZERO)
        a2, beta2 = canon_ineq(a2, beta2)
        rows.append(a2)
        rhs.append(beta2)
    verts = tuple(sorted(scaled_pts))
    inc = tuple(frozenset(j for j, v in enumerate(verts) if dot(a, v) == bb)
                for a, bb in zip(rows, rhs))
    p = Polytope(HRep(tuple(rows), tuple(rhs)), VRep(verts), (), inc)

    expected = 2 * e * e + 2
    if p.n_facets != expected:
        raise ConstructionError(f"expected {expected} facets, got {p.n_facets}")
    for v in p.v.points:
        if any(x < 0 or x > ONE for x in v):
            raise ConstructionError("instance escapes the unit cube")
    return LiftProjectInstance(p, p0, p1, dc, pert, eps,
                               (tuple(mult), tuple(off)))


def cayley_slice(p: Polytope, t) -> Polytope:
    """Slice of a polytope at {x_last = t}, projected off the last
    coordinate."""
    t = rat(t)
    d = p.ambient_dim
    full = p.full_hrep()
    A = list(full.A) + [vunit(d, d - 1), vunit(d, d - 1, -1)]
    b = list(full.b) + [t, -t]
    sl = polytope_from_hrep(HRep(tuple(A), tuple(b)), strict=False)
    return polytope_from_points([v[:-1] for v in sl.v.points])


def minkowski_combination(p0: Polytope, p1: Polytope, t) -> Polytope:
    """(1-t) p0 + t p1, from hull of pairwise vertex combinations."""
    t = rat(t)
    pts = [vadd(vscale(ONE - t, u), vscale(t, v))
           for u in p0.v.points for v in p1.v.points]
    return polytope_from_points(pts)


def height_slice_vertices(p: Polytope, value) -> list[Vec]:
    """Vertices of p lying on {x_last = value} (a face when the hyperplane
    is facet-defining)."""
    value = rat(value)
    return [v for v in p.v.points if v[-1] == value]
