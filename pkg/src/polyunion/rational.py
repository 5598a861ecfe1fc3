"""Exact rational scalars, vectors and matrices.

Everything in this package is computed over arbitrary-precision rationals;
no floating point is used anywhere.  ``Rat`` is gmpy2's mpq when available
(much faster), otherwise the stdlib Fraction.  Both keep values in canonical
form (reduced, positive denominator) by construction.

Vectors are plain tuples of Rat, matrices are tuples of row tuples.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - gmpy2 is a hard dependency in practice
    from fractions import Fraction as Rat

Vec = tuple
Mat = tuple

ZERO = Rat(0)
ONE = Rat(1)


def rat(x, y=None) -> Rat:
    """Build a rational from ints, strings ('p/q') or another rational."""
    if y is not None:
        return Rat(x) / Rat(y)
    if isinstance(x, str):
        return parse_rat(x)
    return Rat(x)


def parse_rat(s: str) -> Rat:
    """Parse a canonical rational literal 'p' or 'p/q'.

    Rejects non-canonical spellings: q <= 0, gcd(|p|, q) > 1, or an explicit
    '/1' denominator.
    """
    s = s.strip()
    if "/" in s:
        ps, qs = s.split("/", 1)
        p, q = int(ps), int(qs)
        if q <= 0:
            raise ValueError(f"non-canonical rational {s!r}: denominator must be positive")
        if q == 1:
            raise ValueError(f"non-canonical rational {s!r}: denominator 1 must be omitted")
        if gcd(abs(p), q) != 1:
            raise ValueError(f"non-canonical rational {s!r}: not in lowest terms")
        return Rat(p) / Rat(q)
    return Rat(int(s))


def format_rat(q) -> str:
    """Canonical text form: 'p' when the denominator is 1, else 'p/q'."""
    q = Rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# vectors


def vec(*entries) -> Vec:
    return tuple(rat(e) for e in entries)


def vzero(d: int) -> Vec:
    return tuple(ZERO for _ in range(d))


def vunit(d: int, i: int, scale=1) -> Vec:
    return tuple(rat(scale) if j == i else ZERO for j in range(d))


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vscale(c, u: Vec) -> Vec:
    c = Rat(c)
    return tuple(c * a for a in u)


def vneg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def dot(u: Vec, v: Vec):
    s = ZERO
    for a, b in zip(u, v, strict=True):
        s += a * b
    return s


def is_zero_vec(u: Vec) -> bool:
    return all(a == 0 for a in u)


def centroid(points: Sequence[Vec]) -> Vec:
    n = Rat(len(points))
    d = len(points[0])
    acc = [ZERO] * d
    for p in points:
        for i, x in enumerate(p):
            acc[i] += x
    return tuple(x / n for x in acc)


# ---------------------------------------------------------------------------
# matrices


def mat(rows: Iterable[Iterable]) -> Mat:
    return tuple(tuple(rat(x) for x in row) for row in rows)


def mat_vec(M: Mat, v: Vec) -> Vec:
    return tuple(dot(row, v) for row in M)


def identity(n: int) -> Mat:
    return tuple(vunit(n, i) for i in range(n))


def mat_rank(M: Sequence[Sequence]) -> int:
    """Exact rank via fraction-free (Bareiss) elimination."""
    rows = [list(r) for r in M]
    if not rows:
        return 0
    m, n = len(rows), len(rows[0])
    rank = 0
    prev = ONE
    for col in range(n):
        piv = None
        for i in range(rank, m):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(rank + 1, m):
            ri = rows[i]
            f = ri[col]
            for j in range(col + 1, n):
                ri[j] = (pr[col] * ri[j] - f * pr[j]) / prev
            ri[col] = ZERO
        prev = pr[col]
        rank += 1
        if rank == m:
            break
    return rank


def rref(M: Sequence[Sequence]):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = [list(r) for r in M]
    if not rows:
        return [], []
    m, n = len(rows), len(rows[0])
    pivots = []
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, m):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ONE / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    return rows, pivots


def kernel_basis(M: Sequence[Sequence]) -> list[Vec]:
    """Basis of { v : M v = 0 }, canonical (one per free column of rref)."""
    rows = [list(r) for r in M]
    if not rows:
        return []
    n = len(rows[0])
    red, pivots = rref(rows)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for j in free:
        v = [ZERO] * n
        v[j] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][j]
        basis.append(tuple(v))
    return basis


def solve_linear(M: Sequence[Sequence], rhs: Sequence):
    """One exact solution of M x = rhs, or None if inconsistent."""
    rows = [list(r) + [b] for r, b in zip(M, rhs, strict=True)]
    n = len(M[0]) if M else 0
    red, pivots = rref(rows)
    x = [ZERO] * n
    for r, pc in enumerate(pivots):
        if pc == n:  # pivot in the rhs column: inconsistent
            return None
        x[pc] = red[r][n]
    # rows below the last pivot are all zero by rref; consistency already checked
    return tuple(x)


def independent_subset(vectors: Sequence[Vec]) -> list[Vec]:
    """Greedy maximal linearly independent subset, preserving order."""
    chosen: list[Vec] = []
    r = 0
    for v in vectors:
        if is_zero_vec(v):
            continue
        if mat_rank(chosen + [v]) > r:
            chosen.append(v)
            r += 1
    return chosen
