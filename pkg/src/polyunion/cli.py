"""Command-line front end: build constructions to .poly files, run the
verification suites, emit reports, and convert between the text and JSON
polytope formats.

Exit codes: 0 pass, 1 verification/construction failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import tempfile
import time

from . import constructions, disjunction, polyfile, verify
from .constructions import ConstructionError
from .disjunction import DisjunctionError
from .lp import LPError
from .polyfile import FormatError
from .polytope import (HRep, PolytopeError, VRep, canon_ineq,
                       polytope_from_points, random_polytope)
from .rational import ONE, parse_rat, rat

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _threads() -> int:
    raw = os.environ.get("POLYUNION_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"POLYUNION_THREADS must be an integer, got {raw!r}")
    if n < 1:
        raise UsageError("POLYUNION_THREADS must be >= 1")
    return n


def _atomic_write(path: str, text: str):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".polyunion-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _emit(text: str, out_path):
    if out_path:
        _atomic_write(out_path, text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_report(report: dict, out_path) -> int:
    _emit(json.dumps(report, indent=2, default=str), out_path)
    return EXIT_PASS if report.get("pass", False) else EXIT_FAIL


# ---------------------------------------------------------------------------
# build


def _rat_flag(value, name):
    try:
        return parse_rat(value)
    except Exception:
        try:
            return rat(value)
        except Exception:
            raise UsageError(f"--{name} must be a rational like 1/2, got {value!r}")


def cmd_build(args) -> int:
    d = args.d
    if args.target == "cyclic":
        k = args.k or 2 * d
        p = constructions.cyclic_polytope(d, k)
        obj, comments = p.v, [f"cyclic polytope d={d} k={k}"]
    elif args.target == "polar":
        k = args.k or d * d
        p = constructions.centered_polar(constructions.cyclic_polytope(d, k))
        obj, comments = p.h, [f"centered polar of cyclic d={d} k={k}"]
    elif args.target == "perturbed":
        if d % 2 != 0:
            raise UsageError("perturbed polar needs even --d")
        _, _, q, pert = constructions.build_construction(d)
        obj = q.h
        comments = [f"perturbed polar d={d} scale_exponent={pert.scale_exponent}"]
        p = q
    elif args.target == "cayley":
        if d != 2:
            raise UsageError("full cayley enumeration is guarded to --d 2")
        dp, _, q, _ = constructions.build_construction(d)
        p = constructions.cayley_embedding(dp.v, q.v)
        obj, comments = p.v, [f"cayley embedding of the d={d} construction"]
    elif args.target == "cross":
        if d > 14:
            raise UsageError("cross-polytope H-rep guarded to --d <= 14")
        p = constructions.cross_polytope_family(d)["Q"]
        obj, comments = p.h, [f"cross-polytope d={d}"]
    elif args.target == "liftproject":
        inst = constructions.lift_project_instance(d)
        p = inst.p
        obj, comments = p.h, [f"lift-and-project instance d={d}"]
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown target {args.target}")
    _emit(polyfile.dumps(obj, comments), args.out)
    print(f"{args.target}: dim={p.dim} vertices={p.n_vertices} facets={p.n_facets}")
    return EXIT_PASS


# ---------------------------------------------------------------------------
# verify


def _verify_balas(d: int, trials: int, seed: int) -> dict:
    rng = random.Random(seed)
    t0 = time.monotonic()
    failures = []
    for trial in range(trials):
        p1 = random_polytope(rng, d)
        p2 = random_polytope(rng, d)
        ef = disjunction.balas_ef(p1.full_hrep(), p2.full_hrep())
        if ef.h.nrows != p1.full_hrep().nrows + p2.full_hrep().nrows + 2 \
                or ef.h.dim != 2 * d + 1:
            failures.append(f"trial {trial}: EF size mismatch")
            continue
        proj = disjunction.project_to_x(ef)
        hull = disjunction.conv_union(p1.v, p2.v)
        left = sorted(canon_ineq(a, b) for a, b in proj.rows())
        right = sorted(canon_ineq(a, b) for a, b in hull.full_hrep().rows())
        if left != right:
            failures.append(f"trial {trial}: projection differs from the hull")
    return verify.make_report(
        "balas", {"d": d, "trials": trials, "seed": seed}, not failures,
        {"trials": trials}, failures, int(1000 * (time.monotonic() - t0)))


def _verify_bigm(rho) -> dict:
    t0 = time.monotonic()
    seg1 = HRep(((ONE,), (-ONE,)), (ONE, rat(0)))          # [0, 1]
    seg2 = HRep(((ONE,), (-ONE,)), (rat(3), rat(-2)))      # [2, 3]
    hull = disjunction.conv_union(
        VRep(((rat(0),), (ONE,))), VRep(((rat(2),), (rat(3),))))
    tight = disjunction.big_m(seg1, seg2, "tight")
    loose = disjunction.big_m(seg1, seg2, "factor", rho)
    res_t = disjunction.convex_hull_property_check(tight, hull)
    res_f = disjunction.convex_hull_property_check(loose, hull)
    failures = []
    if not res_t["holds"]:
        failures.append(f"tight mode broke the hull property: {res_t['witness']}")
    if res_f["holds"]:
        failures.append(f"factor-{rho} mode unexpectedly satisfies the hull property")
    witness = res_f.get("witness")
    counts = {"rho": str(rho),
              "factor_witness": [str(x) for x in witness] if witness else None}
    return verify.make_report("bigm", {"rho": str(rho)}, not failures, counts,
                              failures, int(1000 * (time.monotonic() - t0)))


def _verify_census() -> dict:
    t0 = time.monotonic()
    cube = polytope_from_points(
        [tuple(map(rat, p)) for p in
         [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]])
    simplex4 = polytope_from_points(
        [tuple(ONE if i == j else rat(0) for i in range(4)) for j in range(4)]
        + [tuple(rat(0) for _ in range(4))])
    dp, _, q, _ = constructions.build_construction(2)
    cay = constructions.cayley_embedding(dp.v, q.v)
    failures = []
    counts = {}
    for name, poly in (("cube3", cube), ("simplex4", simplex4), ("cayley2", cay)):
        for d in range(1, poly.dim + 1):
            ok = verify.face_census_check(poly, d)
            counts[f"{name}.d{d}"] = ok
            if not ok:
                failures.append(f"census failed for {name} at d={d}")
    return verify.make_report("census", {}, not failures, counts, failures,
                              int(1000 * (time.monotonic() - t0)))


def cmd_verify(args) -> int:
    if args.suite == "balas":
        report = _verify_balas(args.d or 3, args.trials, args.seed)
    elif args.suite == "bigm":
        report = _verify_bigm(_rat_flag(args.rho, "rho"))
    elif args.suite == "construction":
        d = args.d or 4
        if d % 2 != 0:
            raise UsageError("construction suite needs even --d")
        deg = args.sigma_degree
        report = verify.theorem_construction_check(d, sigma=lambda n: n ** deg)
    elif args.suite == "approx":
        d = args.d or 12
        delta = _rat_flag(args.delta, "delta")
        epsilon = _rat_flag(args.epsilon, "epsilon")
        if d > 12:
            raise UsageError("approx suite enumeration is guarded to --d <= 12")
        t0 = time.monotonic()
        ar = verify.approx_suite(d, delta, epsilon)
        report = verify.make_report(
            "approx",
            {"d": d, "delta": str(delta), "epsilon": str(epsilon)},
            True,
            {"gamma": str(ar.gamma), "falsified_points": ar.falsified_points,
             "cutoff_min": min(ar.cutoff_counts),
             "cutoff_max": max(ar.cutoff_counts),
             "entropy_bound": str(ar.entropy_bound)},
            [], int(1000 * (time.monotonic() - t0)))
    elif args.suite == "liftproject":
        d = args.d or 3
        if d % 2 == 0 or d < 3:
            raise UsageError("lift-project suite needs odd --d >= 3")
        report = verify.lift_project_check(d)
    elif args.suite == "census":
        report = _verify_census()
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown suite {args.suite}")
    return _emit_report(report, args.out)


# ---------------------------------------------------------------------------
# report / convert


def cmd_report(args) -> int:
    if args.kind == "bound":
        if args.fP is None or args.fQ is None:
            raise UsageError("report bound needs --fP and --fQ")
        if args.fP < 1 or args.fQ < 1:
            raise UsageError("--fP and --fQ must be >= 1")
        b = verify.min_additional_vars_bound(args.fP, args.fQ)
        _emit(json.dumps({"fP": b.fP, "fQ": b.fQ, "min_m": b.min_m,
                          "detail": b.detail}, indent=2), args.out)
        return EXIT_PASS
    # workspace summary
    ws = args.workspace or "."
    entries = []
    csv_rows = []
    for name in sorted(os.listdir(ws)):
        path = os.path.join(ws, name)
        if name.endswith(".poly"):
            try:
                obj, comments = polyfile.loads(open(path).read())
            except FormatError as e:
                raise UsageError(f"{name}: {e}")
            kind = "H" if isinstance(obj, HRep) else "V"
            entries.append({"file": name, "kind": kind, "dim": obj.dim,
                            "rows": obj.nrows if kind == "H" else len(obj.points)})
        elif name.endswith(".json"):
            try:
                data = json.loads(open(path).read())
            except json.JSONDecodeError:
                continue
            if isinstance(data, dict) and "check" in data:
                entries.append({"file": name, "check": data["check"],
                                "pass": data.get("pass")})
                c = data.get("counts", {})
                if data["check"] == "construction":
                    csv_rows.append((data["params"]["d"],
                                     c.get("colorful_facets"),
                                     c.get("facets_P1"), c.get("facets_P2")))
    if args.csv:
        lines = ["d,colorful_facets,facets_P1,facets_P2"]
        lines += [",".join(str(x) for x in row) for row in csv_rows]
        _atomic_write(args.csv, "\n".join(lines) + "\n")
    _emit(json.dumps(entries, indent=2), args.out)
    return EXIT_PASS


def cmd_convert(args) -> int:
    try:
        text = open(args.file).read()
    except OSError as e:
        raise UsageError(str(e))
    try:
        if args.file.endswith(".json") or text.lstrip().startswith("{"):
            obj, comments = polyfile.loads_json(text)
        else:
            obj, comments = polyfile.loads(text)
    except FormatError as e:
        raise UsageError(f"{args.file}: {e}")
    if args.format == "json":
        out = polyfile.dumps_json(obj, comments)
    else:
        out = polyfile.dumps(obj, comments)
    _emit(out, args.out)
    return EXIT_PASS


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polyunion",
                                 description="exact polytope-union toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="write a construction to a .poly file")
    b.add_argument("target", choices=["cyclic", "polar", "perturbed", "cayley",
                                      "cross", "liftproject"])
    b.add_argument("--d", type=int, required=True)
    b.add_argument("--k", type=int, default=0)
    b.add_argument("-o", "--out", default=None)
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=["balas", "bigm", "construction", "approx",
                                     "liftproject", "census"])
    v.add_argument("--d", type=int, default=None)
    v.add_argument("--trials", type=int, default=20)
    v.add_argument("--seed", type=int, default=7)
    v.add_argument("--delta", default="1/2")
    v.add_argument("--epsilon", default="1/5")
    v.add_argument("--rho", default="5")
    v.add_argument("--sigma-degree", type=int, default=2)
    v.add_argument("-o", "--out", default=None)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("report", help="emit a bound report or workspace summary")
    r.add_argument("kind", choices=["bound", "summary"])
    r.add_argument("--fP", type=int, default=None)
    r.add_argument("--fQ", type=int, default=None)
    r.add_argument("--workspace", default=None)
    r.add_argument("--csv", default=None)
    r.add_argument("-o", "--out", default=None)
    r.set_defaults(func=cmd_report)

    c = sub.add_parser("convert", help="convert between text and JSON formats")
    c.add_argument("file")
    c.add_argument("--format", choices=["json", "text"], required=True)
    c.add_argument("-o", "--out", default=None)
    c.set_defaults(func=cmd_convert)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        _threads()  # validate the environment override early
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ConstructionError, DisjunctionError, PolytopeError, LPError,
            verify.VerifyError) as e:
        print(f"failure: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
