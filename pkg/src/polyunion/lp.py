"""Exact rational linear programming.

Two-phase primal simplex with Bland's rule over systems A x <= b with free
variables.  Everything is computed in exact rational arithmetic, pivoting is
deterministic, and every optimal solve carries a dual certificate
(y >= 0, y^T A = c, y^T b = value) that is re-verified before returning.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rational import ONE, ZERO, Rat, Vec, dot


class LPError(Exception):
    pass


@dataclass(frozen=True)
class LPResult:
    status: str  # 'optimal' | 'infeasible' | 'unbounded'
    value: Rat | None = None
    point: Vec | None = None
    dual: Vec | None = None  # certificate for the *maximization* actually solved

    def __bool__(self):  # truthy iff optimal
        return self.status == "optimal"


def _pivot(T, z, basis, r, c):
    piv = T[r][c]
    inv = ONE / piv
    T[r] = [x * inv for x in T[r]]
    pr = T[r]
    for i in range(len(T)):
        if i != r:
            f = T[i][c]
            if f != 0:
                T[i] = [a - f * b for a, b in zip(T[i], pr)]
    f = z[c]
    if f != 0:
        for j in range(len(z)):
            z[j] -= f * pr[j]
    basis[r] = c


def _run_simplex(T, z, basis, allowed):
    """Simplex loop: largest-coefficient rule, falling back to Bland's rule
    after a run of degenerate pivots so cycling cannot occur.  Returns
    'optimal' or 'unbounded'."""
    ncols = len(z) - 1  # z has a trailing rhs slot kept in sync
    degenerate_run = 0
    while True:
        enter = -1
        if degenerate_run <= 40:
            best_z = ZERO
            for j in range(ncols):
                if allowed[j] and z[j] > best_z:
                    best_z = z[j]
                    enter = j
        else:
            for j in range(ncols):
                if allowed[j] and z[j] > 0:
                    enter = j
                    break
        if enter < 0:
            return "optimal"
        leave = -1
        best = None
        for i in range(len(T)):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return "unbounded"
        degenerate_run = degenerate_run + 1 if best == 0 else 0
        _pivot(T, z, basis, leave, enter)


def _objrow(obj, T, basis, ncols):
    z = list(obj) + [ZERO]
    for i, bi in enumerate(basis):
        cb = obj[bi]
        if cb != 0:
            row = T[i]
            for j in range(ncols + 1):
                z[j] -= cb * row[j]
    return z


def lp_solve(A, b, c, sense: str = "max") -> LPResult:
    """Optimize c.x over {x : A x <= b} exactly.

    For sense='min' the problem -c is maximized internally; the returned dual
    certifies that maximization (y >= 0, y^T A = -c, y^T b = -value).
    """
    m = len(A)
    n = len(c)
    for row in A:
        if len(row) != n:
            raise LPError(f"dimension mismatch: row has {len(row)} entries, objective has {n}")
    if len(b) != m:
        raise LPError(f"dimension mismatch: {m} rows but {len(b)} right-hand sides")
    if sense == "min":
        res = lp_solve(A, b, tuple(-Rat(x) for x in c), "max")
        if res.status != "optimal":
            return res
        return LPResult("optimal", -res.value, res.point, res.dual)
    if sense != "max":
        raise LPError(f"unknown sense {sense!r}")

    c = tuple(Rat(x) for x in c)
    # columns: x+ (n) | x- (n) | slacks (m) | artificials (appended)
    nslack0 = 2 * n
    nart0 = 2 * n + m
    T = []
    basis = []
    art_rows = []
    for i in range(m):
        row = [Rat(x) for x in A[i]] + [-Rat(x) for x in A[i]] + [ZERO] * m + [Rat(b[i])]
        row[nslack0 + i] = ONE
        if row[-1] < 0:
            row = [-x for x in row]
        if row[nslack0 + i] == ONE:
            basis.append(nslack0 + i)
        else:
            art_rows.append(i)
            basis.append(-1)  # placeholder, artificial assigned below
        T.append(row)

    nart = len(art_rows)
    ncols = nart0 + nart
    for k, i in enumerate(art_rows):
        for r in range(m):
            T[r].insert(nart0 + k, ONE if r == i else ZERO)
        basis[i] = nart0 + k

    allowed = [True] * ncols

    if nart:
        obj1 = [ZERO] * ncols
        for k in range(nart):
            obj1[nart0 + k] = -ONE
        z = _objrow(obj1, T, basis, ncols)
        _run_simplex(T, z, basis, allowed)
        val1 = sum((obj1[basis[i]] * T[i][-1] for i in range(m)), ZERO)
        if val1 != 0:
            return LPResult("infeasible")
        # drive leftover artificials out of the basis
        drop = []
        for i in range(m):
            if basis[i] >= nart0:
                piv = -1
                for j in range(nart0):
                    if T[i][j] != 0:
                        piv = j
                        break
                if piv >= 0:
                    _pivot(T, z, basis, i, piv)
                else:
                    drop.append(i)
        for i in reversed(drop):
            del T[i]
            del basis[i]
        for j in range(nart0, ncols):
            allowed[j] = False

    obj2 = list(c) + [-x for x in c] + [ZERO] * (ncols - 2 * n)
    z = _objrow(obj2, T, basis, ncols)
    status = _run_simplex(T, z, basis, allowed)
    if status == "unbounded":
        return LPResult("unbounded")

    xv = [ZERO] * ncols
    for i, bi in enumerate(basis):
        xv[bi] = T[i][-1]
    point = tuple(xv[j] - xv[n + j] for j in range(n))
    value = dot(c, point)
    dual = tuple(-z[nslack0 + i] for i in range(m))

    # exact self-check of the certificate
    for i in range(m):
        if dual[i] < 0:
            raise LPError("internal error: negative dual multiplier")
        if dot(A[i], point) > b[i]:
            raise LPError("internal error: returned point infeasible")
    for j in range(n):
        if sum((dual[i] * A[i][j] for i in range(m)), ZERO) != c[j]:
            raise LPError("internal error: dual certificate violates y^T A = c")
    if sum((dual[i] * Rat(b[i]) for i in range(m)), ZERO) != value:
        raise LPError("internal error: dual certificate violates y^T b = value")
    return LPResult("optimal", value, point, dual)


def feasible_point(A, b) -> Vec | None:
    """Some exact feasible point of A x <= b, or None."""
    res = lp_solve(A, b, tuple(ZERO for _ in range(len(A[0]))), "max")
    return res.point if res else None
