"""Named diagrams and an independent enumerator of simply laced hyperbolics.

Vertex labels follow the drawings: a hyperbolic extension ``HX`` has its
extra vertex labelled ``-1`` attached to the affine node ``0`` of ``X``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .cartan import (
    GCM,
    DynkinDiagram,
    Kind,
    canonical_form,
    connected_components,
    connected_type,
    is_hyperbolic,
)
from .errors import RankOutOfRange, UnknownName

FAMILIES = ("HA", "HD", "HE", "irregular", "rank2", "auxiliary", "affine", "finite")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    diagram: DynkinDiagram
    family: str
    base: Optional[str] = None  # affine X for a hyperbolic extension HX

    @property
    def gcm(self) -> GCM:
        return self.diagram.gcm()

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.diagram.labels

    @property
    def rank(self) -> int:
        return self.diagram.n


def _chain(labels: Sequence) -> List[Tuple[str, str, int]]:
    return [(str(a), str(b), 1) for a, b in zip(labels, labels[1:])]


def _labels(*xs) -> List[str]:
    return [str(x) for x in xs]


# affine diagrams X with node 0 as the extension point

def affine_a(k: int) -> DynkinDiagram:
    if k == 1:
        return DynkinDiagram.from_edges(["0", "1"], [("0", "1", 2)])
    labels = _labels(*range(k + 1))
    return DynkinDiagram.from_edges(labels, _chain(labels) + [(str(k), "0", 1)])


def affine_d(k: int) -> DynkinDiagram:
    labels = _labels(*range(k + 1))
    edges = [("0", "2", 1), ("1", "2", 1)] + _chain(range(2, k - 1))
    edges += [(str(k - 2), str(k - 1), 1), (str(k - 2), str(k), 1)]
    return DynkinDiagram.from_edges(labels, edges)


def affine_e(k: int) -> DynkinDiagram:
    # line 0..(k-1) with the branch node placed as in the drawings
    labels = _labels(*range(k + 1))
    if k == 6:
        edges = _chain(range(5)) + [("2", "5", 1), ("5", "6", 1)]
    elif k == 7:
        edges = _chain(range(7)) + [("3", "7", 1)]
    elif k == 8:
        edges = _chain(range(8)) + [("5", "8", 1)]
    else:
        raise ValueError(k)
    return DynkinDiagram.from_edges(labels, edges)


def extend(x: DynkinDiagram) -> DynkinDiagram:
    """Attach a vertex ``-1`` to node ``0`` by a single edge."""
    labels = ["-1"] + list(x.labels)
    edges = [(x.label(i), x.label(j), m) for i, j, m in x.edges()] + [("-1", "0", 1)]
    return DynkinDiagram.from_edges(labels, edges)


def _irregulars() -> Dict[str, DynkinDiagram]:
    L3 = ["-1", "0", "1"]
    return {
        "X6": DynkinDiagram.from_edges(
            _labels(-1, 0, 1, 2, 3, 4),
            [("-1", "2", 1), ("0", "2", 1), ("1", "2", 1), ("3", "2", 1), ("4", "2", 1)]),
        "Y5": DynkinDiagram.from_edges(
            _labels(-1, 0, 1, 2, 3),
            [("1", "2", 1), ("2", "3", 1), ("3", "0", 1), ("1", "0", 1),
             ("0", "-1", 1), ("-1", "2", 1)]),
        "Y4": DynkinDiagram.from_edges(
            _labels(-1, 0, 1, 2),
            [("1", "2", 1), ("2", "0", 1), ("0", "1", 1), ("0", "-1", 1), ("-1", "2", 1)]),
        "Z4": DynkinDiagram.from_edges(
            _labels(-1, 0, 1, 2),
            [("1", "2", 1), ("2", "0", 1), ("0", "1", 1), ("0", "-1", 1), ("-1", "2", 1),
             ("-1", "1", 1)]),
        "Y3": DynkinDiagram.from_edges(L3, [("0", "1", 2), ("-1", "0", 1), ("-1", "1", 1)]),
        "T2": DynkinDiagram.from_edges(L3, [("0", "1", 2), ("-1", "1", 2), ("-1", "0", 2)]),
        "T1": DynkinDiagram.from_edges(L3, [("0", "1", 2), ("-1", "0", 2), ("-1", "1", 1)]),
        "T0": DynkinDiagram.from_edges(L3, [("0", "1", 2), ("-1", "0", 2)]),
    }


def _e10_edges() -> List[Tuple[str, str, int]]:
    return _chain(range(-1, 8)) + [("5", "8", 1)]


def rank2(a: int) -> DynkinDiagram:
    return DynkinDiagram.from_edges(["1", "2"], [("1", "2", a)])


def _key(name: str) -> str:
    return name.replace("_", "").replace(" ", "")


class Catalog:
    """An ordered, name-indexed collection of diagrams.

    Lookup ignores underscores, so ``"HA_1(1)"`` and ``"HA1(1)"`` agree.
    """

    def __init__(self, entries: Sequence[CatalogEntry], aliases: Dict[str, str] = None):
        self.entries: List[CatalogEntry] = list(entries)
        self._by_key = {_key(e.name): e for e in self.entries}
        for alias, target in (aliases or {}).items():
            self._by_key[_key(alias)] = self._by_key[_key(target)]
        self._forms = None

    def names(self, families: Sequence[str] = None) -> List[str]:
        return [e.name for e in self.entries if families is None or e.family in families]

    def hyperbolic_names(self) -> List[str]:
        return self.names(("HA", "HD", "HE", "irregular"))

    def get(self, name: str) -> CatalogEntry:
        m = re.fullmatch(r"H2\((\d+)\)", _key(name))
        if m:
            a = int(m.group(1))
            if a < 3:
                raise UnknownName(f"H2(a) requires a >= 3, got {a}")
            return CatalogEntry(f"H2({a})", rank2(a), "rank2")
        try:
            return self._by_key[_key(name)]
        except KeyError:
            raise UnknownName(f"no catalog entry named {name!r}") from None

    def __contains__(self, name: str) -> bool:
        try:
            self.get(name)
        except UnknownName:
            return False
        return True

    def identify(self, d: DynkinDiagram) -> Optional[str]:
        """First entry (in index order) isomorphic to ``d``."""
        if self._forms is None:
            self._forms = [(canonical_form(e.diagram), e.name) for e in self.entries]
        form = canonical_form(d)
        for f, name in self._forms:
            if f == form:
                return name
        if d.n == 2 and d.mult[0][1] >= 3:
            return f"H2({d.mult[0][1]})"
        return None

    def replace(self, name: str, diagram: DynkinDiagram) -> "Catalog":
        """Copy with one entry's diagram swapped (used for fault injection)."""
        entries = [CatalogEntry(e.name, diagram, e.family, e.base) if e.name == name else e
                   for e in self.entries]
        aliases = {k: v.name for k, v in self._by_key.items() if _key(v.name) != k}
        return Catalog(entries, aliases)


def _build_default() -> Catalog:
    entries: List[CatalogEntry] = []
    for k in range(1, 8):
        entries.append(CatalogEntry(f"HA_{k}(1)", extend(affine_a(k)), "HA", f"A_{k}(1)"))
    for k in range(4, 9):
        entries.append(CatalogEntry(f"HD_{k}(1)", extend(affine_d(k)), "HD", f"D_{k}(1)"))
    for k in (6, 7):
        entries.append(CatalogEntry(f"HE_{k}(1)", extend(affine_e(k)), "HE", f"E_{k}(1)"))
    entries.append(CatalogEntry(
        "E10", DynkinDiagram.from_edges(_labels(*range(-1, 9)), _e10_edges()), "HE", "E_8(1)"))
    for name, d in _irregulars().items():
        entries.append(CatalogEntry(name, d, "irregular"))
    entries.append(CatalogEntry("HA_8(1)", extend(affine_a(8)), "auxiliary", "A_8(1)"))
    entries.append(CatalogEntry(
        "P10",
        DynkinDiagram.from_edges(_labels(*range(-1, 9)), _e10_edges() + [("-1", "8", 1)]),
        "auxiliary"))
    for k in range(1, 9):
        entries.append(CatalogEntry(f"A_{k}(1)", affine_a(k), "affine"))
    for k in range(4, 9):
        entries.append(CatalogEntry(f"D_{k}(1)", affine_d(k), "affine"))
    for k in (6, 7, 8):
        entries.append(CatalogEntry(f"E_{k}(1)", affine_e(k), "affine"))
    entries.append(CatalogEntry("A1", DynkinDiagram(((0,),), ("1",)), "finite"))
    entries.append(CatalogEntry("A2", DynkinDiagram.from_edges(["1", "2"], [("1", "2", 1)]),
                                "finite"))
    return Catalog(entries, {"HE_8(1)": "E10"})


DEFAULT = _build_default()


def get(name: str) -> CatalogEntry:
    return DEFAULT.get(name)


def identify(d: DynkinDiagram) -> Optional[str]:
    return DEFAULT.identify(d)


# --- enumeration ----------------------------------------------------------------

# Edge multiplicities a new vertex may use. Above 2, the new vertex and its
# neighbour already form an indefinite rank-2 subdiagram, which a hyperbolic
# diagram of rank >= 3 cannot contain as a proper connected piece.
_MULTS = (0, 1, 2)


def _add_vertex(mult: Tuple[Tuple[int, ...], ...], new: Sequence[int]):
    k = len(mult)
    rows = [list(r) + [new[i]] for i, r in enumerate(mult)]
    rows.append(list(new) + [0])
    return tuple(tuple(r) for r in rows)


def _gcm_of(mult, idx) -> List[List[int]]:
    return [[2 if i == j else -mult[i][j] for j in idx] for i in idx]


def _component_of(mult, v: int, allowed: Sequence[int]) -> List[int]:
    allowed = set(allowed)
    comp, stack = {v}, [v]
    while stack:
        x = stack.pop()
        for y in allowed:
            if y not in comp and mult[x][y]:
                comp.add(y)
                stack.append(y)
    return sorted(comp)


def _fin_or_aff(mult, comp: Sequence[int]) -> bool:
    return connected_type(_gcm_of(mult, comp)) is not Kind.INDEFINITE


def _extensions(state, final: bool) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Connected one-vertex extensions of a connected finite/affine ``state``.

    Edges to the existing vertices are chosen one at a time. Any partial
    choice that does not yet cover every old vertex is a proper subdiagram
    of the result, so the component of the new vertex must already be
    finite or affine; that check prunes almost everything.
    """
    k = len(state)
    v = k

    def rec(j: int, new: List[int]):
        if j == k:
            if any(new):
                yield _add_vertex(state, new)
            return
        for m in _MULTS:
            new.append(m)
            if m:
                if j < k - 1 or not final:
                    mult = _add_vertex(_sub(state, range(j + 1)), new)
                    # vertices 0..j plus the new one (index j+1 in ``mult``)
                    comp = _component_of(mult, j + 1, range(j + 2))
                    if not _fin_or_aff(mult, comp):
                        new.pop()
                        continue
            yield from rec(j + 1, new)
            new.pop()

    yield from rec(0, [])


def _sub(mult, idx):
    return tuple(tuple(mult[i][j] for j in idx) for i in idx)


def _is_hyperbolic_fast(mult) -> bool:
    n = len(mult)
    if connected_type(_gcm_of(mult, range(n))) is not Kind.INDEFINITE:
        return False
    for v in range(n):
        rest = [i for i in range(n) if i != v]
        d = DynkinDiagram(mult)
        for comp in connected_components(d, rest):
            if not _fin_or_aff(mult, comp):
                return False
    return True


_STATES: Dict[int, Dict[bytes, Tuple]] = {}


def _connected_fin_aff(size: int) -> Dict[bytes, Tuple]:
    """All connected finite/affine diagrams with ``size`` vertices, keyed by form."""
    if size in _STATES:
        return _STATES[size]
    if size == 1:
        out = {canonical_form(DynkinDiagram(((0,),))): ((0,),)}
    else:
        out = {}
        for state in _connected_fin_aff(size - 1).values():
            for mult in _extensions(state, final=False):
                if _fin_or_aff(mult, range(size)):
                    out.setdefault(canonical_form(DynkinDiagram(mult)), mult)
    _STATES[size] = out
    return out


def enumerate_hyperbolic_simply_laced(rank: int) -> List[DynkinDiagram]:
    """All connected simply laced hyperbolic diagrams of the given rank (3..10).

    Every connected graph has a non-cut vertex, so each target is a connected
    finite/affine diagram of rank - 1 plus one vertex; those in turn are built
    the same way. Results are deduplicated and sorted by canonical form.
    """
    if not 3 <= rank <= 10:
        raise RankOutOfRange(f"rank must be in 3..10, got {rank}")
    found: Dict[bytes, DynkinDiagram] = {}
    for state in _connected_fin_aff(rank - 1).values():
        for mult in _extensions(state, final=True):
            d = DynkinDiagram(mult)
            form = canonical_form(d)
            if form in found or not _is_hyperbolic_fast(mult):
                continue
            assert all(m in _MULTS for row in mult for m in row)
            assert is_hyperbolic(d)
            found[form] = d
    return [found[f] for f in sorted(found)]
