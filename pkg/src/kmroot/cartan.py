"""Generalized Cartan matrices, Dynkin diagrams and their classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import exact
from .errors import (
    AsymmetricZero,
    BadDiagonal,
    NotConnected,
    NotIndefinite,
    NotSquare,
    PositiveOffDiagonal,
    RankTooLarge,
)

MAX_RANK = 12

IntMatrix = Tuple[Tuple[int, ...], ...]


def _freeze(matrix: Iterable[Iterable[int]]) -> IntMatrix:
    return tuple(tuple(int(v) for v in row) for row in matrix)


@dataclass(frozen=True)
class GCM:
    """A validated generalized Cartan matrix.

    Construction checks the three axioms; use :func:`validate_gcm` to build
    one from any nested sequence.
    """

    entries: IntMatrix

    def __post_init__(self):
        a = self.entries
        n = len(a)
        if n == 0 or any(len(row) != n for row in a):
            raise NotSquare(f"expected a non-empty square matrix, got {n} rows")
        for i in range(n):
            if a[i][i] != 2:
                raise BadDiagonal(i, a[i][i])
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                if a[i][j] > 0:
                    raise PositiveOffDiagonal(i, j, a[i][j])
                if a[i][j] == 0 and a[j][i] != 0:
                    raise AsymmetricZero(i, j)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def symmetric(self) -> bool:
        a = self.entries
        return all(a[i][j] == a[j][i] for i in range(self.n) for j in range(i))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def validate_gcm(matrix: Sequence[Sequence[int]]) -> GCM:
    rows = list(matrix)
    if any(len(r) != len(rows) for r in rows):
        raise NotSquare("matrix is not square")
    return GCM(_freeze(rows))


@dataclass(frozen=True)
class DynkinDiagram:
    """Multigraph view of a symmetric GCM.

    ``mult[i][j]`` is the number of edges joining vertices ``i`` and ``j``.
    ``labels`` optionally carries external vertex names (the conventional
    numbering ``-1, 0, 1, ...``); internal indices are always ``0..n-1``.
    """

    mult: IntMatrix
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        m = self.mult
        n = len(m)
        for i in range(n):
            if len(m[i]) != n or m[i][i] != 0:
                raise ValueError("multiplicity matrix must be square with zero diagonal")
            for j in range(i):
                if m[i][j] != m[j][i] or m[i][j] < 0:
                    raise ValueError(f"bad multiplicity at ({i},{j})")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("one label per vertex required")

    @property
    def n(self) -> int:
        return len(self.mult)

    @classmethod
    def from_gcm(cls, g, labels: Optional[Sequence[str]] = None) -> "DynkinDiagram":
        a = g.entries if isinstance(g, GCM) else _freeze(g)
        n = len(a)
        if any(a[i][j] != a[j][i] for i in range(n) for j in range(n)):
            raise ValueError("Dynkin diagrams are only defined here for symmetric matrices")
        mult = tuple(tuple(0 if i == j else -a[i][j] for j in range(n)) for i in range(n))
        return cls(mult, tuple(labels) if labels is not None else None)

    @classmethod
    def from_edges(cls, labels: Sequence[str], edges: Iterable[Tuple[str, str, int]]
                   ) -> "DynkinDiagram":
        """Build from ``(label_a, label_b, multiplicity)`` triples."""
        pos = {lab: k for k, lab in enumerate(labels)}
        n = len(labels)
        m = [[0] * n for _ in range(n)]
        for a, b, k in edges:
            i, j = pos[str(a)], pos[str(b)]
            m[i][j] = m[j][i] = k
        return cls(_freeze(m), tuple(str(x) for x in labels))

    def gcm(self) -> GCM:
        n = self.n
        return GCM(tuple(tuple(2 if i == j else -self.mult[i][j] for j in range(n))
                         for i in range(n)))

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def index(self, label) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(str(label))

    def neighbors(self, i: int) -> List[int]:
        return [j for j in range(self.n) if self.mult[i][j]]

    def edges(self) -> List[Tuple[int, int, int]]:
        return [(i, j, self.mult[i][j]) for i in range(self.n) for j in range(i + 1, self.n)
                if self.mult[i][j]]

    def permute(self, sigma: Sequence[int]) -> "DynkinDiagram":
        """Relabel so that old vertex ``i`` becomes new vertex ``sigma[i]``."""
        n = self.n
        inv = [0] * n
        for i, s in enumerate(sigma):
            inv[s] = i
        mult = tuple(tuple(self.mult[inv[a]][inv[b]] for b in range(n)) for a in range(n))
        labels = None if self.labels is None else tuple(self.labels[inv[a]] for a in range(n))
        return DynkinDiagram(mult, labels)

    def subdiagram(self, idx: Sequence[int]) -> "DynkinDiagram":
        mult = tuple(tuple(self.mult[i][j] for j in idx) for i in idx)
        labels = None if self.labels is None else tuple(self.labels[i] for i in idx)
        return DynkinDiagram(mult, labels)


class Kind(enum.Enum):
    FINITE = "finite"
    AFFINE = "affine"
    INDEFINITE = "indefinite"


@dataclass(frozen=True)
class DiagramType:
    kind: Kind
    hyperbolic: bool = False

    def __str__(self) -> str:
        if self.kind is Kind.INDEFINITE and self.hyperbolic:
            return "indefinite, hyperbolic"
        return self.kind.value


def _matrix(g) -> IntMatrix:
    if isinstance(g, GCM):
        return g.entries
    if isinstance(g, DynkinDiagram):
        return g.gcm().entries
    return _freeze(g)


@lru_cache(maxsize=4096)
def _classify_exhaustive(a: IntMatrix) -> Kind:
    n = len(a)
    full = exact.det(a)
    proper_ok = True
    for size in range(1, n):
        for idx in combinations(range(n), size):
            if exact.det(exact.principal_submatrix(a, idx)) <= 0:
                proper_ok = False
                break
        if not proper_ok:
            break
    if proper_ok and full > 0:
        return Kind.FINITE
    if proper_ok and full == 0:
        return Kind.AFFINE
    return Kind.INDEFINITE


def classify(g) -> DiagramType:
    """Finite / affine / indefinite by the principal-minor definition.

    Every one of the ``2**n - 1`` principal minors is computed exactly. The
    hyperbolic flag is filled in for connected indefinite matrices.
    """
    a = _matrix(g)
    if len(a) > MAX_RANK:
        raise RankTooLarge(f"rank {len(a)} exceeds {MAX_RANK}")
    kind = _classify_exhaustive(a)
    if kind is Kind.INDEFINITE and _is_connected(a):
        return DiagramType(kind, _hyperbolic_unchecked(a))
    return DiagramType(kind)


def _adjacent(a: IntMatrix, i: int, j: int) -> bool:
    return i != j and (a[i][j] != 0 or a[j][i] != 0)


def _components(a: IntMatrix, subset: Iterable[int]) -> List[List[int]]:
    remaining = sorted(set(subset))
    seen = set()
    out = []
    for s in remaining:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        allowed = set(remaining)
        while stack:
            v = stack.pop()
            for w in allowed:
                if w not in seen and _adjacent(a, v, w):
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def _is_connected(a: IntMatrix) -> bool:
    return len(_components(a, range(len(a)))) == 1


def connected_components(d, subset: Optional[Iterable[int]] = None) -> List[List[int]]:
    """Partition ``subset`` (default: all vertices) into connected pieces."""
    a = _matrix(d)
    if subset is None:
        subset = range(len(a))
    return _components(a, subset)


def is_connected(g) -> bool:
    return _is_connected(_matrix(g))


def _hyperbolic_unchecked(a: IntMatrix) -> bool:
    n = len(a)
    for v in range(n):
        rest = [i for i in range(n) if i != v]
        for comp in _components(a, rest):
            sub = _freeze(exact.principal_submatrix(a, comp))
            if _classify_exhaustive(sub) is Kind.INDEFINITE:
                return False
    return True


def is_hyperbolic(g) -> bool:
    """True iff deleting any single vertex leaves only finite/affine components."""
    a = _matrix(g)
    if len(a) > MAX_RANK:
        raise RankTooLarge(f"rank {len(a)} exceeds {MAX_RANK}")
    if not _is_connected(a):
        raise NotConnected("hyperbolicity is defined for connected diagrams")
    if _classify_exhaustive(a) is not Kind.INDEFINITE:
        raise NotIndefinite("diagram is not of indefinite type")
    return _hyperbolic_unchecked(a)


def connected_type(a: Sequence[Sequence[int]]) -> Kind:
    """Type of a *connected* symmetric GCM from its leading minors alone.

    For an indecomposable symmetric GCM, a nonpositive proper leading minor
    forces indefinite type; otherwise the top-left block is positive
    definite and the sign of the determinant decides. Much cheaper than the
    exhaustive test; the enumerator relies on it.
    """
    n = len(a)
    minors = exact.leading_minors(a)
    if len(minors) < n or any(d <= 0 for d in minors[:-1]):
        return Kind.INDEFINITE
    d = minors[-1]
    if d > 0:
        return Kind.FINITE
    if d == 0:
        return Kind.AFFINE
    return Kind.INDEFINITE


# --- canonical forms ----------------------------------------------------------

def _refine(mult: IntMatrix, colors: List[int]) -> List[int]:
    n = len(mult)
    while True:
        sigs = [(colors[v], tuple(sorted((colors[u], mult[v][u]) for u in range(n)
                                         if mult[v][u])))
                for v in range(n)]
        ranks = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _twins(mult: IntMatrix, u: int, w: int) -> bool:
    return all(mult[u][x] == mult[w][x] for x in range(len(mult)) if x != u and x != w)


def _encode(mult: IntMatrix, order: Sequence[int]) -> Tuple[int, ...]:
    n = len(order)
    return tuple(mult[order[i]][order[j]] for i in range(n) for j in range(i + 1, n))


def _canonical_search(mult: IntMatrix) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Return (minimal encoding, vertex order realising it)."""
    n = len(mult)
    best: List = [None, None]

    def recurse(colors: List[int]):
        colors = _refine(mult, colors)
        if len(set(colors)) == n:
            order = tuple(sorted(range(n), key=lambda v: colors[v]))
            code = _encode(mult, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        cells: Dict[int, List[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = min(c for c, vs in cells.items() if len(vs) > 1)
        tried: List[int] = []
        for v in cells[target]:
            # swapping twins is an automorphism fixing everything individualised so far
            if any(_twins(mult, v, t) for t in tried):
                continue
            tried.append(v)
            new = [2 * c + 1 for c in colors]
            new[v] = 2 * target
            recurse(new)

    degree = [tuple(sorted(m for m in row if m)) for row in mult]
    ranks = {s: k for k, s in enumerate(sorted(set(degree)))}
    recurse([ranks[s] for s in degree])
    return best[0], best[1]


def canonical_order(d: DynkinDiagram) -> Tuple[int, ...]:
    if d.n > MAX_RANK:
        raise RankTooLarge(f"rank {d.n} exceeds {MAX_RANK}")
    if d.n == 0:
        return ()
    return _canonical_search(d.mult)[1]


@lru_cache(maxsize=65536)
def _canonical_bytes(mult: IntMatrix) -> bytes:
    if not mult:
        return b"0:"
    code = _canonical_search(mult)[0]
    return f"{len(mult)}:{','.join(map(str, code))}".encode()


def canonical_form(d: DynkinDiagram) -> bytes:
    """Permutation-invariant byte encoding: equal iff the diagrams are isomorphic."""
    if d.n > MAX_RANK:
        raise RankTooLarge(f"rank {d.n} exceeds {MAX_RANK}")
    return _canonical_bytes(d.mult)


def are_isomorphic(d1: DynkinDiagram, d2: DynkinDiagram) -> Optional[Tuple[int, ...]]:
    """A permutation ``sigma`` with ``d1.mult[i][j] == d2.mult[sigma[i]][sigma[j]]``."""
    if d1.n != d2.n:
        return None
    if d1.mult == d2.mult:
        return tuple(range(d1.n))
    if canonical_form(d1) != canonical_form(d2):
        return None
    o1, o2 = canonical_order(d1), canonical_order(d2)
    sigma = [0] * d1.n
    for a, b in zip(o1, o2):
        sigma[a] = b
    return tuple(sigma)
