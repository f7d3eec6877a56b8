"""DOT and ASCII renderings of Dynkin diagrams.

Edges of multiplicity ``m > 1`` are drawn as ``m`` parallel lines carrying
arrowheads toward both endpoints.
"""

from __future__ import annotations

from typing import List, Optional

from .cartan import DynkinDiagram


def to_dot(d: DynkinDiagram, name: str = "D") -> str:
    safe = "".join(ch if ch.isalnum() else "_" for ch in name)
    lines = [f"graph {safe} {{", "  node [shape=circle, width=0.3, fixedsize=true];"]
    for i in range(d.n):
        lines.append(f'  v{i} [label="{d.label(i)}"];')
    for i, j, m in d.edges():
        if m == 1:
            lines.append(f"  v{i} -- v{j};")
        else:
            for _ in range(m):
                lines.append(f"  v{i} -- v{j} [dir=both, arrowhead=normal, arrowtail=normal];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _bond(m: int) -> str:
    if m == 1:
        return "---"
    if m == 2:
        return "<=>"
    return f"<{m}>"


def _spine(d: DynkinDiagram) -> Optional[List[int]]:
    """Longest path of a tree whose off-path vertices are all leaves, else None."""
    n = d.n
    edges = d.edges()
    if n == 0 or len(edges) != n - 1:
        return None

    def farthest(src):
        dist = {src: 0}
        prev = {src: None}
        stack = [src]
        while stack:
            v = stack.pop()
            for w in d.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    prev[w] = v
                    stack.append(w)
        if len(dist) != n:
            return None, None
        end = max(sorted(dist), key=lambda v: dist[v])
        return end, prev

    a, _ = farthest(0)
    if a is None:
        return None
    b, prev = farthest(a)
    path = []
    while b is not None:
        path.append(b)
        b = prev[b]
    on = set(path)
    if any(len(d.neighbors(v)) != 1 for v in range(n) if v not in on):
        return None
    if path[0] > path[-1]:
        path.reverse()
    return path


def to_ascii(d: DynkinDiagram) -> str:
    """Line-plus-pendants drawing for trees of that shape, edge list otherwise."""
    path = _spine(d)
    if path is None:
        out = [f"{d.n} vertices"]
        for i, j, m in d.edges():
            out.append(f"  {d.label(i)} {_bond(m)} {d.label(j)}")
        return "\n".join(out) + "\n"
    cols = {}
    line = ""
    for k, v in enumerate(path):
        if k:
            line += _bond(d.mult[path[k - 1]][v])
        cols[v] = len(line) + len(d.label(v)) // 2
        line += d.label(v)
    rows = [line]
    on = set(path)
    pendants = sorted((v for v in range(d.n) if v not in on),
                      key=lambda v: cols[d.neighbors(v)[0]])
    for v in pendants:
        u = d.neighbors(v)[0]
        c = cols[u]
        m = d.mult[u][v]
        mark = "|" if m == 1 else ("||" if m == 2 else str(m))
        rows.append(" " * c + mark)
        rows.append(" " * max(0, c - len(d.label(v)) // 2) + d.label(v))
    return "\n".join(r.rstrip() for r in rows) + "\n"
