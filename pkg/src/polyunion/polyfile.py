"""Polytope text format and its JSON twin.

Text format: first line ``H <d> <m>`` or ``V <d> <n>``; each subsequent
non-comment line holds whitespace-separated canonical rationals (``p/q``,
``q`` omitted when 1).  H rows read ``a1 ... ad b`` meaning a.x <= b.
Comment lines start with ``#`` and are preserved in order (they carry the
header extensions used by disjunctive formulations and colorings).

The JSON twin stores the same rows as strings, so text -> json -> text is
byte-identical.
"""

from __future__ import annotations

import json

from .polytope import HRep, VRep
from .rational import format_rat, parse_rat


class FormatError(Exception):
    pass


def _comment_lines(comments):
    return [c if c.lstrip().startswith("#") else f"# {c}" for c in comments]


def dumps_hrep(h: HRep, comments=()) -> str:
    lines = [f"H {h.dim} {h.nrows}"]
    lines += _comment_lines(comments)
    for a, b in h.rows():
        lines.append(" ".join(format_rat(x) for x in (*a, b)))
    return "\n".join(lines) + "\n"


def dumps_vrep(v: VRep, comments=()) -> str:
    lines = [f"V {v.dim} {len(v.points)}"]
    lines += _comment_lines(comments)
    for p in v.points:
        lines.append(" ".join(format_rat(x) for x in p))
    return "\n".join(lines) + "\n"


def loads(text: str):
    """Parse the text format; returns (HRep-or-VRep, comments)."""
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty file")
    head = lines[0].split()
    if len(head) != 3 or head[0] not in ("H", "V"):
        raise FormatError(f"bad header line: {lines[0]!r}")
    kind = head[0]
    try:
        d, n = int(head[1]), int(head[2])
    except ValueError as e:
        raise FormatError(f"bad header counts: {e}") from None
    comments = []
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        if line.lstrip().startswith("#"):
            comments.append(line)
            continue
        toks = line.split()
        width = d + 1 if kind == "H" else d
        if len(toks) != width:
            raise FormatError(f"line {lineno}: expected {width} entries, got {len(toks)}")
        try:
            rows.append(tuple(parse_rat(t) for t in toks))
        except ValueError as e:
            raise FormatError(f"line {lineno}: {e}") from None
    if len(rows) != n:
        raise FormatError(f"header announces {n} rows, file has {len(rows)}")
    if kind == "H":
        return HRep(tuple(r[:-1] for r in rows), tuple(r[-1] for r in rows)), comments
    return VRep(tuple(rows)), comments


def to_json_obj(obj, comments=()) -> dict:
    if isinstance(obj, HRep):
        return {"kind": "H", "dim": obj.dim,
                "comments": list(comments),
                "rows": [[format_rat(x) for x in (*a, b)] for a, b in obj.rows()]}
    if isinstance(obj, VRep):
        return {"kind": "V", "dim": obj.dim,
                "comments": list(comments),
                "rows": [[format_rat(x) for x in p] for p in obj.points]}
    raise FormatError(f"cannot serialize {type(obj).__name__}")


def from_json_obj(o: dict):
    kind = o.get("kind")
    d = o["dim"]
    rows = [tuple(parse_rat(t) for t in row) for row in o["rows"]]
    comments = list(o.get("comments", []))
    if kind == "H":
        for r in rows:
            if len(r) != d + 1:
                raise FormatError("H row width mismatch")
        return HRep(tuple(r[:-1] for r in rows), tuple(r[-1] for r in rows)), comments
    if kind == "V":
        for r in rows:
            if len(r) != d:
                raise FormatError("V row width mismatch")
        return VRep(tuple(rows)), comments
    raise FormatError(f"bad kind {kind!r}")


def dumps_json(obj, comments=()) -> str:
    return json.dumps(to_json_obj(obj, comments), indent=2) + "\n"


def loads_json(text: str):
    return from_json_obj(json.loads(text))


def dumps(obj, comments=()) -> str:
    if isinstance(obj, HRep):
        return dumps_hrep(obj, comments)
    if isinstance(obj, VRep):
        return dumps_vrep(obj, comments)
    raise FormatError(f"cannot serialize {type(obj).__name__}")
