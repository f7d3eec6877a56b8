"""Reading and writing GCM files.

Two formats are accepted. JSON::

    {"n": 3, "entries": [[2, -1, 0], [-1, 2, -2], [0, -2, 2]], "labels": ["-1", "0", "1"]}

and plain text: the first line holds ``n``, followed by ``n`` rows of
whitespace-separated integers. Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import json
from typing import List, Optional, Sequence, Tuple

from .cartan import GCM, validate_gcm
from .errors import KMRootError, ParseError


def _parse_json(text: str) -> Tuple[List[List[int]], Optional[List[str]]]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(obj, dict) or "entries" not in obj:
        raise ParseError('expected an object with an "entries" field', 1, 1)
    entries = obj["entries"]
    if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
        raise ParseError('"entries" must be a list of rows', 1, 1)
    for r, row in enumerate(entries):
        for c, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParseError(f"entry ({r},{c}) is not an integer: {v!r}", 1, 1)
    n = obj.get("n", len(entries))
    if n != len(entries):
        raise ParseError(f'"n" is {n} but {len(entries)} rows were given', 1, 1)
    labels = obj.get("labels")
    if labels is not None:
        if len(labels) != n:
            raise ParseError(f"{len(labels)} labels for {n} vertices", 1, 1)
        labels = [str(x) for x in labels]
    return entries, labels


def _parse_text(text: str) -> Tuple[List[List[int]], None]:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            lines.append((lineno, raw, body))
    if not lines:
        raise ParseError("empty input", 1, 1)

    def ints(lineno, raw, body):
        out = []
        col = 0
        for tok in body.split():
            col = raw.index(tok, col) + 1
            try:
                out.append(int(tok))
            except ValueError:
                raise ParseError(f"not an integer: {tok!r}", lineno, col) from None
            col += len(tok) - 1
        return out

    head = ints(*lines[0])
    if len(head) != 1 or head[0] <= 0:
        raise ParseError("first line must hold the positive matrix size", lines[0][0], 1)
    n = head[0]
    rows = lines[1:]
    if len(rows) != n:
        last = rows[-1][0] if rows else lines[0][0]
        raise ParseError(f"expected {n} rows, found {len(rows)}", last, 1)
    entries = []
    for lineno, raw, body in rows:
        row = ints(lineno, raw, body)
        if len(row) != n:
            raise ParseError(f"expected {n} entries, found {len(row)}", lineno, 1)
        entries.append(row)
    return entries, None


def parse_gcm(text: str) -> Tuple[GCM, Optional[List[str]]]:
    """Parse either format and validate the matrix axioms."""
    stripped = text.lstrip()
    entries, labels = _parse_json(text) if stripped.startswith("{") else _parse_text(text)
    try:
        return validate_gcm(entries), labels
    except KMRootError as exc:
        raise ParseError(str(exc), 1, 1) from None


def read_gcm(path: str) -> Tuple[GCM, Optional[List[str]]]:
    with open(path, encoding="utf-8") as fh:
        return parse_gcm(fh.read())


def gcm_to_json(g: GCM, labels: Optional[Sequence[str]] = None) -> dict:
    obj = {"n": g.n, "entries": [list(r) for r in g.entries]}
    if labels is not None:
        obj["labels"] = list(labels)
    return obj
