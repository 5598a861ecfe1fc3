"""Verification suites: the extra-variable counting bound with its face
census, the colorful-certificate construction check, approximation
falsification with cut-off counting over the sign-pattern family, the
conic-combination restriction, and the lift-and-project check.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from .constructions import (ConstructionError, build_construction,
                            cayley_embedding, certificate_inequality,
                            colorful_faces, colorful_facet_certificate,
                            cross_polytope_family, lift_project_instance,
                            point_family_S, verify_certificate_on_cayley,
                            ColoredHRep)
from .lp import lp_solve
from .polytope import (HRep, Polytope, PolytopeError, VRep, all_faces,
                       canon_ineq, face_dim, find_combinatorial_bijection,
                       polytope_from_hrep, polytope_from_points)
from .rational import (ONE, ZERO, Rat, Vec, dot, is_zero_vec, kernel_basis,
                       rat, vadd, vscale, vsub, vzero)


class VerifyError(Exception):
    pass


@dataclass(frozen=True)
class BoundReport:
    fP: int
    fQ: int
    d: int
    min_m: int
    detail: str = ""


@dataclass
class ApproxReport:
    epsilon: Rat
    delta: Rat
    gamma: Rat
    d: int
    cutoff_counts: list = field(default_factory=list)
    entropy_bound: Rat = ZERO
    falsified_points: int = 0


@dataclass(frozen=True)
class EntropyBound:
    """Exact binomial sum and the rational analytic upper estimate
    (n/k)^k (n/(n-k))^(n-k); the sum never exceeds the estimate."""

    binomial_sum: int
    analytic: Rat


@dataclass(frozen=True)
class ConicCombination:
    """ineq = sum of multiplier[i] * (row facet_indices[i]) of the polytope,
    with the right-hand side lowered to the support value."""

    facet_indices: tuple[int, ...]
    multipliers: tuple[Rat, ...]
    lhs: Vec
    rhs: Rat


# ---------------------------------------------------------------------------
# counting bound


def min_additional_vars_bound(fP: int, fQ: int, d: int = 0) -> BoundReport:
    """Smallest m >= 0 with (fQ+1)^(m+1) >= fP, by integer arithmetic."""
    if fP < 1 or fQ < 1:
        raise VerifyError("facet counts must be positive")
    m = 0
    power = fQ + 1
    while power < fP:
        m += 1
        power *= fQ + 1
    return BoundReport(fP, fQ, d, m,
                       detail=f"({fQ}+1)^({m}+1) = {power} >= {fP}")


def face_census_check(q: Polytope, d: int) -> bool:
    """Count proper faces of q of dimension >= d-1 and compare against
    (f(q)+1)^(m+1) with m = dim(q) - d."""
    if q.dim < d:
        raise VerifyError("polytope dimension below the target dimension")
    m = q.dim - d
    count = sum(1 for vs in all_faces(q)
                if len(vs) not in (0, q.n_vertices) and face_dim(q, vs) >= d - 1)
    return count <= (q.n_facets + 1) ** (m + 1)


# ---------------------------------------------------------------------------
# main construction check


def theorem_construction_check(d: int, sigma=None, full_enumeration=None) -> dict:
    """Build the colored polar pair and verify every colorful certificate is
    a distinct facet of the Cayley embedding.  For d=2 (or on request) the
    full facet enumeration of the embedding cross-checks the count."""
    t0 = time.monotonic()
    if full_enumeration is None:
        full_enumeration = d == 2
    dpoly, dc, qpoly, pert = build_construction(d)
    report = {
        "check": "construction",
        "params": {"d": d},
        "pass": False,
        "counts": {"facets_P1": dpoly.n_facets, "facets_P2": qpoly.n_facets,
                   "scale_exponent": pert.scale_exponent},
        "witnesses": [],
    }
    failures = []
    if dpoly.n_facets != d * d or qpoly.n_facets != d * d:
        failures.append(f"facet counts {dpoly.n_facets}, {qpoly.n_facets} != {d * d}")
    tuples = colorful_faces(dc, dpoly)
    expected = (2 * d) ** (d // 2)
    if len(tuples) != expected:
        failures.append(f"{len(tuples)} colorful tuples, expected {expected}")
    rows = set()
    for tup in tuples:
        try:
            cert = colorful_facet_certificate(dpoly, qpoly, dc, pert, tup)
            verify_certificate_on_cayley(cert, dpoly, qpoly)
        except ConstructionError as e:
            failures.append(str(e))
            continue
        rows.add(canon_ineq(*certificate_inequality(cert)))
    if len(rows) != expected:
        failures.append(f"{len(rows)} distinct certificate facets, expected {expected}")
    report["counts"]["colorful_facets"] = len(rows)
    if full_enumeration:
        cay = cayley_embedding(dpoly.v, qpoly.v)
        facet_rows = {canon_ineq(a, b) for a, b in cay.h.rows()}
        report["counts"]["cayley_facets"] = cay.n_facets
        if not rows <= facet_rows:
            failures.append("a certificate row is missing from the full enumeration")
        if cay.n_facets < expected:
            failures.append("embedding has fewer facets than certificates")
    if sigma is not None:
        fq = int(sigma(2 * d * d))
        bound = min_additional_vars_bound(max(len(rows), 1), fq, d)
        report["counts"]["sigma_fQ"] = fq
        report["counts"]["min_m"] = bound.min_m
        report["bound_detail"] = bound.detail
    report["pass"] = not failures
    report["witnesses"] = failures
    report["runtime_ms"] = int(1000 * (time.monotonic() - t0))
    return report


# ---------------------------------------------------------------------------
# approximation falsification


def _support_over_points(points, c) -> Rat:
    return max(dot(c, p) for p in points)


def _support_lp(points, c) -> Rat:
    """max c.x over conv(points), solved as an LP in the convex weights."""
    n = len(points)
    rows = [tuple(ONE for _ in range(n)), tuple(-ONE for _ in range(n))]
    b = [ONE, -ONE]
    for i in range(n):
        rows.append(tuple(-ONE if j == i else ZERO for j in range(n)))
        b.append(ZERO)
    obj = tuple(dot(c, p) for p in points)
    res = lp_solve(rows, b, obj, "max")
    if res.status != "optimal":
        raise VerifyError("support LP did not solve")
    return res.value


def _width(points, c, by_lp: bool) -> Rat:
    f = _support_lp if by_lp else _support_over_points
    return f(points, c) + f(points, tuple(-x for x in c))


def _points_of(obj):
    if isinstance(obj, Polytope):
        return obj.v.points
    if isinstance(obj, VRep):
        return obj.points
    raise VerifyError("expected a Polytope or VRep")


def approx_falsify(P, Pprime, epsilon, directions) -> dict:
    """First direction c with width(P', c) > (1+eps) * width(P, c), if any.
    The screening pass scans vertices; a returned witness is re-verified by
    four LP solves.  A negative answer only covers the given directions."""
    epsilon = rat(epsilon)
    if epsilon < 0:
        raise VerifyError("epsilon must be nonnegative")
    pts = _points_of(P)
    pts2 = _points_of(Pprime)
    gen = set(pts2)
    for v in pts:
        if v not in gen and not _in_hull(v, pts2):
            raise VerifyError("inner polytope is not contained in the outer one")
    for c in directions:
        c = tuple(rat(x) for x in c)
        if is_zero_vec(c):
            continue
        if _width(pts2, c, False) > (ONE + epsilon) * _width(pts, c, False):
            if not _width(pts2, c, True) > (ONE + epsilon) * _width(pts, c, True):
                raise VerifyError("witness failed LP re-verification")
            return {"falsified": True, "witness_direction": c}
    return {"falsified": False, "witness_direction": None}


def _in_hull(x, points) -> bool:
    n = len(points)
    d = len(x)
    rows = [tuple(ONE for _ in range(n)), tuple(-ONE for _ in range(n))]
    b = [ONE, -ONE]
    for i in range(d):
        row = tuple(p[i] for p in points)
        rows.append(row)
        b.append(rat(x[i]))
        rows.append(tuple(-y for y in row))
        b.append(-rat(x[i]))
    for i in range(n):
        rows.append(tuple(-ONE if j == i else ZERO for j in range(n)))
        b.append(ZERO)
    res = lp_solve(rows, b, tuple(ZERO for _ in range(n)), "max")
    return res.status == "optimal"


def sign_directions(d: int):
    """The 2^d sign vectors; the default direction set for falsification."""
    if d > 12:
        raise VerifyError("direction set capped at d <= 12")
    import itertools
    return [tuple(rat(s) for s in signs)
            for signs in itertools.product((1, -1), repeat=d)]


# ---------------------------------------------------------------------------
# cut-off counting


def entropy_upper_bound(n: int, k: int) -> EntropyBound:
    """sum_{j<=k} C(n,j) together with the exact rational value of the
    analytic estimate 2^(n H(k/n)) = (n/k)^k (n/(n-k))^(n-k)."""
    if not 0 <= 2 * k <= n:
        raise VerifyError("need 0 <= k <= n/2")
    s = sum(math.comb(n, j) for j in range(k + 1))
    if k == 0:
        analytic = ONE
    elif 2 * k == n:
        analytic = rat(2) ** n
    else:
        analytic = rat(n, k) ** k * rat(n, n - k) ** (n - k)
    if s > analytic:
        raise VerifyError("binomial sum exceeds the analytic estimate")
    return EntropyBound(s, analytic)


def _gamma(delta: Rat) -> Rat:
    return (rat(2) + delta) / (2 * (ONE + delta))


def cutoff_count(facet_inequality, S, report: ApproxReport) -> int:
    """Points of S cut off by the inequality, counted by enumeration.  For a
    sign-vector facet row the count is cross-checked against the binomial
    closed form sum_{t > gamma*d} C(d, t) and against the entropy estimate."""
    a, beta = facet_inequality
    a = tuple(rat(x) for x in a)
    beta = rat(beta)
    count = sum(1 for s in S if dot(a, s) > beta)
    if all(abs(x) == ONE for x in a) and beta == ONE:
        d = report.d
        threshold = _gamma(report.delta) * d
        closed = sum(math.comb(d, t) for t in range(d + 1) if t > threshold)
        if count != closed:
            raise VerifyError(f"enumerated count {count} != closed form {closed}")
        k = int((ONE - _gamma(report.delta)) * d)  # floor
        if 2 * k <= d and count > entropy_upper_bound(d, k).analytic:
            raise VerifyError("count exceeds the entropy estimate")
    return count


def _cutoff_count_bits(amask: int, smasks, d: int, t_min_exclusive) -> int:
    """Cut-off count for a sign-vector facet via bit masks: a point is cut
    off iff it agrees with the facet row in more than gamma*d positions."""
    return sum(1 for m in smasks if d - ((m ^ amask).bit_count()) > t_min_exclusive)


def approx_suite(d: int, delta, epsilon) -> ApproxReport:
    """The cross-polytope approximation experiment: falsify the hull of the
    cross-polytope with each sign-pattern point added, then count cut-offs
    for every facet (bit-mask reduction, spot-checked by enumeration)."""
    delta = rat(delta)
    epsilon = rat(epsilon)
    if not delta > 2 * epsilon:
        raise VerifyError("need delta > 2*epsilon")
    report = ApproxReport(epsilon=epsilon, delta=delta,
                          gamma=_gamma(delta), d=d)
    fam = cross_polytope_family(d)
    q = fam["Q"]
    S = point_family_S(d, delta)
    for s in S:
        c = tuple(ONE if x > 0 else -ONE for x in s)
        hull = VRep(tuple(list(q.v.points) + [s]))
        out = approx_falsify(q.v, hull, epsilon, [c])
        if not out["falsified"]:
            raise VerifyError(f"point {s} was not falsified")
        report.falsified_points += 1

    thr = _gamma(delta) * d
    smasks = [sum(1 << i for i, x in enumerate(s) if x > 0) for s in S]
    counts = []
    for j, a in enumerate(q.h.A):
        amask = sum(1 << i for i, x in enumerate(a) if x > 0)
        counts.append(_cutoff_count_bits(amask, smasks, d, thr))
        if j < 4:  # exact-dot-product spot check
            if counts[-1] != cutoff_count((a, ONE), S, report):
                raise VerifyError("bit-mask count disagrees with enumeration")
    report.cutoff_counts = counts
    k = int((ONE - _gamma(delta)) * d)
    report.entropy_bound = entropy_upper_bound(d, k).analytic if 2 * k <= d \
        else rat(2) ** d
    return report


# ---------------------------------------------------------------------------
# conic-combination restriction


def caratheodory_restrict(P: Polytope, ineq) -> ConicCombination:
    """Rewrite a valid inequality as a conic combination of at most d facet
    rows of P.  The dual LP certificate gives multipliers; dependent support
    rows are then eliminated one at a time."""
    c, beta0 = tuple(rat(x) for x in ineq[0]), rat(ineq[1])
    h = P.full_hrep()
    res = lp_solve(h.A, h.b, c, "max")
    if res.status != "optimal":
        raise VerifyError("polytope must be bounded and nonempty")
    if res.value > beta0:
        raise VerifyError("inequality is not valid for the polytope")
    beta = res.value  # lowered to the support value
    y = list(res.dual)
    d = P.ambient_dim

    def support():
        return [i for i, yi in enumerate(y) if yi != 0]

    sup = support()
    while len(sup) > d:
        ker = kernel_basis([h.A[i] for i in sup])
        if not ker:
            raise VerifyError("internal error: support rows are independent")
        z = ker[0]
        # step y_sup -> y_sup - t*z until a positive entry reaches zero
        cands = [(y[i] / z[j], i) for j, i in enumerate(sup) if z[j] > 0]
        if not cands:
            z = tuple(-x for x in z)
            cands = [(y[i] / z[j], i) for j, i in enumerate(sup) if z[j] > 0]
        t = min(cands)[0]
        for j, i in enumerate(sup):
            y[i] -= t * z[j]
        sup = support()
    if any(y[i] < 0 for i in sup):
        raise VerifyError("internal error: negative multiplier")
    lhs = vzero(d)
    rhs = ZERO
    for i in sup:
        lhs = vadd(lhs, vscale(y[i], h.A[i]))
        rhs += y[i] * h.b[i]
    if lhs != c or rhs != beta:
        raise VerifyError("internal error: combination does not reproduce the inequality")
    return ConicCombination(tuple(sup), tuple(y[i] for i in sup), lhs, rhs)


# ---------------------------------------------------------------------------
# lift-and-project check


def _scaled_colored(dc: ColoredHRep, mult, off) -> ColoredHRep:
    """Push an H-rep through the per-coordinate map x -> mult*x + off."""
    rows = []
    rhs = []
    for a, b in dc.h.rows():
        a2 = tuple(a[i] / mult[i] for i in range(len(a)))
        b2 = b + sum((a[i] * off[i] / mult[i] for i in range(len(a))), ZERO)
        rows.append(a2)
        rhs.append(b2)
    return ColoredHRep(HRep(tuple(rows), tuple(rhs)), dc.color)


def lift_project_check(d: int, full_enumeration=None) -> dict:
    """Build the lift-and-project instance, confirm the two unit-height
    slices are combinatorial copies of the polar pair, and run the colorful
    certificate suite on their joint hull (= the instance itself)."""
    t0 = time.monotonic()
    if full_enumeration is None:
        full_enumeration = d == 3
    inst = lift_project_instance(d)
    e = d - 1
    p = inst.p
    report = {
        "check": "liftproject",
        "params": {"d": d},
        "pass": False,
        "counts": {"facets": p.n_facets, "vertices": p.n_vertices,
                   "expected_facets": 2 * e * e + 2},
        "witnesses": [],
    }
    failures = []
    if p.n_facets != 2 * e * e + 2:
        failures.append("unexpected facet count")

    lower = sorted(v[:-1] for v in p.v.points if v[-1] == ZERO)
    upper = sorted(v[:-1] for v in p.v.points if v[-1] == ONE)
    mult, off = inst.scale
    dc0 = _scaled_colored(inst.dc, mult[:-1], off[:-1])
    dc1 = _scaled_colored(ColoredHRep(inst.p1.h, inst.dc.color),
                          mult[:-1], off[:-1])
    s0 = polytope_from_hrep(dc0.h, strict=True)
    s1 = polytope_from_hrep(dc1.h, strict=True)
    if sorted(s0.v.points) != lower or sorted(s1.v.points) != upper:
        failures.append("slices do not match the scaled polar pair")
    if find_combinatorial_bijection(s0, inst.p0) is None:
        failures.append("lower slice is not a combinatorial copy")
    if find_combinatorial_bijection(s1, inst.p1) is None:
        failures.append("upper slice is not a combinatorial copy")

    tuples = colorful_faces(dc0, s0)
    expected = (2 * e) ** (e // 2)
    rows = set()
    for tup in tuples:
        try:
            cert = colorful_facet_certificate(s0, s1, dc0, inst.pert, tup)
            verify_certificate_on_cayley(cert, s0, s1)
        except ConstructionError as exc:
            failures.append(str(exc))
            continue
        rows.add(canon_ineq(*certificate_inequality(cert)))
    report["counts"]["colorful_facets"] = len(rows)
    if len(rows) < expected:
        failures.append(f"only {len(rows)} colorful facets, expected {expected}")
    if full_enumeration:
        # the joint hull of the two slices (their Cayley embedding)
        hull = polytope_from_points([v + (ZERO,) for v in lower] +
                                    [v + (ONE,) for v in upper])
        report["counts"]["hull_facets"] = hull.n_facets
        hull_rows = {canon_ineq(a, b) for a, b in hull.h.rows()}
        if not rows <= hull_rows:
            failures.append("a certificate row is not a facet of the hull")
    bound = min_additional_vars_bound(p.n_facets, e * e, d)
    report["counts"]["min_m"] = bound.min_m
    report["counts"]["epsilon"] = str(inst.epsilon)
    report["pass"] = not failures
    report["witnesses"] = failures
    report["runtime_ms"] = int(1000 * (time.monotonic() - t0))
    return report


# ---------------------------------------------------------------------------
# report plumbing


def make_report(check: str, params: dict, passed: bool, counts: dict,
                witnesses, runtime_ms: int) -> dict:
    return {"check": check, "params": params, "pass": bool(passed),
            "counts": counts, "witnesses": list(witnesses),
            "runtime_ms": int(runtime_ms)}
