"""Root subdiagrams: verification, the construction rules, and the E10 recipe book.

A root subdiagram of a host diagram is the diagram of the Gram matrix of a
list of positive real roots whose pairwise pairings are nonpositive. Only
the lattice-level data is handled here; no Lie brackets are built.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from . import catalog as _catalog
from .cartan import GCM, DynkinDiagram, Kind, are_isomorphic, is_connected
from .catalog import Catalog, CatalogEntry
from .errors import (
    BadParameter,
    BadVertex,
    EmbeddingError,
    HostMismatch,
    NoDesignatedZero,
    NotAChain,
    NotAffine,
    NotPositive,
    NotRealRoot,
    PositivePairing,
    TooManyRoots,
    UnknownName,
    UnknownTarget,
)
from .exact import gram as _gram
from .lattice import (
    Coords,
    RootLattice,
    RootVector,
    is_positive_real_root,
    null_root,
)

Vertex = Union[int, str]


@dataclass(frozen=True)
class Embedding:
    host: RootLattice
    roots: Tuple[Coords, ...]
    gram: Tuple[Tuple[int, ...], ...]
    labels: Tuple[str, ...]
    target: Optional[str] = None
    validated: bool = False
    word: Tuple[str, ...] = field(default=(), compare=False)

    @property
    def k(self) -> int:
        return len(self.roots)

    @property
    def diagram(self) -> DynkinDiagram:
        return DynkinDiagram.from_gcm(self.gram, self.labels)

    def root_vectors(self) -> List[RootVector]:
        return [RootVector(r, self.host) for r in self.roots]

    def position(self, v: Vertex) -> int:
        if isinstance(v, int):
            if not 0 <= v < self.k:
                raise BadVertex(f"position {v} out of range 0..{self.k - 1}")
            return v
        try:
            return self.labels.index(str(v))
        except ValueError:
            raise BadVertex(f"no root labelled {v!r}") from None


def check_root_subdiagram(host: RootLattice, roots: Sequence, labels: Sequence[str] = None,
                          target: Optional[str] = None, word: Tuple[str, ...] = ()
                          ) -> Embedding:
    """Certify that ``roots`` span a root subdiagram of ``host``.

    Each root must be a positive real root (norm test inside the scope of
    the norm criterion, reflection descent otherwise) and every pair must
    pair nonpositively; then ``beta_i - beta_j`` has norm >= 4 and cannot
    be a root, so the Gram matrix is the Cartan matrix of the subalgebra.
    """
    coords = [tuple(r.coords) if isinstance(r, RootVector) else tuple(r) for r in roots]
    if not coords:
        raise EmbeddingError("at least one root is required")
    if len(coords) > host.n:
        raise TooManyRoots(f"{len(coords)} roots exceed host rank {host.n}")
    for i, c in enumerate(coords):
        if len(c) != host.n:
            raise HostMismatch(f"root {i} has {len(c)} coordinates, host rank is {host.n}")
        if any(x < 0 for x in c):
            raise NotPositive(i)
        if not is_positive_real_root(RootVector(c, host)):
            raise NotRealRoot(i)
    g = _gram(coords, host.form)
    for i in range(len(coords)):
        for j in range(i + 1, len(coords)):
            if g[i][j] > 0:
                raise PositivePairing(i, j, g[i][j])
    if labels is None:
        labels = [str(i) for i in range(len(coords))]
    return Embedding(host, tuple(coords), tuple(tuple(r) for r in g), tuple(labels),
                     target, True, tuple(word))


def identity(host: RootLattice, target: Optional[str] = None) -> Embedding:
    roots = [host.simple_root(i) for i in range(host.n)]
    labels = [host.label(i) for i in range(host.n)]
    return check_root_subdiagram(host, roots, labels, target)


@lru_cache(maxsize=None)
def lattice(name: str) -> RootLattice:
    """Root lattice of a default-catalog diagram, cached by name."""
    return RootLattice.from_diagram(_catalog.get(name).diagram)


def hyperbolic_extension(x: Union[CatalogEntry, DynkinDiagram]) -> RootLattice:
    d = x.diagram if isinstance(x, CatalogEntry) else x
    lat = RootLattice.from_diagram(d)
    if lat.diagram_type.kind is not Kind.AFFINE or not is_connected(lat.gcm):
        raise NotAffine("hyperbolic extensions are taken of connected affine diagrams")
    if d.labels is None or "0" not in d.labels:
        raise NoDesignatedZero("affine diagram has no vertex labelled 0")
    if "-1" in d.labels:
        raise EmbeddingError("label -1 is reserved for the new vertex")
    return RootLattice.from_diagram(_catalog.extend(d))


@dataclass(frozen=True)
class _Extension:
    minus_one: int
    zero: int
    delta: Coords
    finite_part: Tuple[int, ...]


def _extension_parts(hx: RootLattice) -> _Extension:
    if hx.labels is None or "-1" not in hx.labels or "0" not in hx.labels:
        raise NoDesignatedZero("host needs vertices labelled -1 and 0")
    m1, z = hx.index("-1"), hx.index("0")
    form = hx.form
    if form[m1][z] != -1 or any(form[m1][j] for j in range(hx.n) if j not in (m1, z)):
        raise EmbeddingError("vertex -1 must be joined to vertex 0 alone, by a single edge")
    rest = [i for i in range(hx.n) if i != m1]
    x = RootLattice(GCM(tuple(tuple(form[i][j] for j in rest) for i in rest)),
                    tuple(hx.labels[i] for i in rest))
    dx = null_root(x)
    delta = [0] * hx.n
    for pos, i in enumerate(rest):
        delta[i] = dx.coords[pos]
    finite = tuple(i for i in rest if i != z)
    return _Extension(m1, z, tuple(delta), finite)


def _add(*vs: Sequence[int], coeffs: Sequence[int] = None) -> Coords:
    coeffs = coeffs or [1] * len(vs)
    return tuple(sum(c * v[k] for c, v in zip(coeffs, vs)) for k in range(len(vs[0])))


def _unit(n: int, i: int) -> Coords:
    return tuple(int(k == i) for k in range(n))


def principle_a(hx: RootLattice) -> Embedding:
    """Replace the extra simple root by ``delta + a_0 + 2 a_{-1}``.

    The new vertex loses its edge to node 0 and is joined instead to every
    neighbour of node 0 in X.
    """
    ext = _extension_parts(hx)
    roots = [_unit(hx.n, i) for i in range(hx.n)]
    roots[ext.minus_one] = _add(ext.delta, _unit(hx.n, ext.zero), _unit(hx.n, ext.minus_one),
                                coeffs=[1, 1, 2])
    return check_root_subdiagram(hx, roots, hx.labels, word=("A",))


def _finite_vertices(hx: RootLattice, ext: _Extension, vs: Iterable[Vertex]) -> List[int]:
    out = []
    for v in vs:
        try:
            i = hx.index(str(v))
        except Exception:
            raise BadVertex(f"{v!r} is not a vertex of the host") from None
        if i not in ext.finite_part:
            raise BadVertex(f"{v!r} is not a vertex of the finite diagram underlying X")
        out.append(i)
    return out


def principle_b_prime(hx: RootLattice, subset: Iterable[Vertex]) -> Embedding:
    """Add ``delta`` to each simple root in ``subset``: vertex -1 gains an edge to each."""
    ext = _extension_parts(hx)
    chosen = _finite_vertices(hx, ext, subset)
    roots = [_unit(hx.n, i) for i in range(hx.n)]
    for i in chosen:
        roots[i] = _add(roots[i], ext.delta)
    names = ",".join(hx.label(i) for i in chosen)
    return check_root_subdiagram(hx, roots, hx.labels, word=(f"B'({{{names}}})",))


def principle_b(hx: RootLattice, p: Vertex) -> Embedding:
    e = principle_b_prime(hx, [p])
    return replace(e, word=(f"B({p})",))


def principle_c(e: Embedding, chain: Sequence[Vertex]) -> Embedding:
    """Shrink an induced A_p chain to the single root given by its sum."""
    pos = [e.position(v) for v in chain]
    if not pos or len(set(pos)) != len(pos):
        raise NotAChain("chain must be a nonempty list of distinct vertices")
    g = e.gram
    for a in range(len(pos)):
        for b in range(a + 1, len(pos)):
            want = -1 if b == a + 1 else 0
            if g[pos[a]][pos[b]] != want:
                raise NotAChain(
                    f"vertices {e.labels[pos[a]]} and {e.labels[pos[b]]} pair to "
                    f"{g[pos[a]][pos[b]]}, expected {want}")
    total = _add(*[e.roots[i] for i in pos])
    # 2p on the diagonal and -2(p-1) from the chain edges
    assert _gram([total], e.host.form)[0][0] == 2
    at = min(pos)
    roots, labels = [], []
    for i in range(e.k):
        if i == at:
            roots.append(total)
            labels.append("+".join(e.labels[j] for j in pos))
        elif i not in pos:
            roots.append(e.roots[i])
            labels.append(e.labels[i])
    word = e.word + ("C(" + ",".join(e.labels[i] for i in pos) + ")",)
    return check_root_subdiagram(e.host, roots, labels, word=word)


def principle_d(e: Embedding, delete: Iterable[Vertex]) -> Embedding:
    gone = {e.position(v) for v in delete}
    keep = [i for i in range(e.k) if i not in gone]
    if not keep:
        raise BadVertex("cannot delete every vertex")
    gram = tuple(tuple(e.gram[i][j] for j in keep) for i in keep)
    word = e.word + ("D({" + ",".join(e.labels[i] for i in sorted(gone)) + "})",)
    return Embedding(e.host, tuple(e.roots[i] for i in keep), gram,
                     tuple(e.labels[i] for i in keep), None, e.validated, word)


def compose(outer: Embedding, inner: Embedding) -> Embedding:
    """Push ``inner`` (living in the lattice of ``outer``'s diagram) into ``outer.host``."""
    if inner.host.gcm.entries != outer.gram:
        raise HostMismatch("inner embedding's host is not the outer embedding's diagram")
    roots = []
    for r in inner.roots:
        roots.append(tuple(sum(m * outer.roots[j][c] for j, m in enumerate(r))
                           for c in range(outer.host.n)))
    out = check_root_subdiagram(outer.host, roots, inner.labels, inner.target,
                                outer.word + inner.word)
    assert out.gram == inner.gram
    return out


def align(e: Embedding, d: DynkinDiagram) -> Embedding:
    """Reorder ``e``'s roots so its Gram matrix equals the GCM of ``d`` exactly."""
    sigma = are_isomorphic(d, e.diagram)
    if sigma is None:
        raise EmbeddingError("embedding's diagram is not isomorphic to the requested one")
    roots = tuple(e.roots[sigma[i]] for i in range(d.n))
    gram = tuple(tuple(e.gram[sigma[i]][sigma[j]] for j in range(d.n)) for i in range(d.n))
    labels = d.labels if d.labels is not None else tuple(str(i) for i in range(d.n))
    return Embedding(e.host, roots, gram, tuple(labels), e.target, e.validated, e.word)


def _ha1() -> RootLattice:
    return hyperbolic_extension(_catalog.get("A_1(1)"))


def t_family(m: int) -> Embedding:
    """Roots ``m delta + a_1``, ``delta + a_0`` and ``a_{-1}`` of HA_1(1)."""
    if m < 0:
        raise BadParameter("m must be nonnegative")
    host = _ha1()
    i1, i0, im = host.index("1"), host.index("0"), host.index("-1")
    c = [[0] * host.n for _ in range(3)]
    c[0][i1], c[0][i0] = m + 1, m
    c[1][i1], c[1][i0] = 1, 2
    c[2][im] = 1
    return check_root_subdiagram(host, [tuple(r) for r in (c[2], c[1], c[0])],
                                 ["-1", "0", "1"], f"T{m}" if m <= 2 else None,
                                 word=(f"T({m})",))


def rank2_embedding(a: int) -> Embedding:
    """``a_{-1}`` and ``(a-1) delta + a_0`` in HA_1(1); they pair to ``-a``."""
    if a < 3:
        raise BadParameter(f"rank-2 hyperbolic needs a >= 3, got {a}")
    host = _ha1()
    b1 = host.simple_root("-1").coords
    b2 = [0] * host.n
    b2[host.index("0")] = a
    b2[host.index("1")] = a - 1
    e = check_root_subdiagram(host, [b1, tuple(b2)], ["1", "2"], f"H2({a})",
                              word=(f"R2({a})",))
    assert e.gram == ((2, -a), (-a, 2))
    return e


# --- recipe book -----------------------------------------------------------------

def _ha_steps(k: int):
    return (("B", "7"),) + tuple(("C", f"HA_{j}(1)") for j in range(7, k - 1, -1))


def _hd_steps(k: int):
    return (("A",),) + tuple(("C", f"HD_{j}(1)") for j in range(7, k - 1, -1))


RECIPES = {
    "E10": (),
    "HD_8(1)": (("A",),),
    "HA_8(1)": (("B", "7"),),
    "P10": (("B", "8"),),
    "HE_7(1)": (("B", "7"), ("D", ("0",))),
    "HE_6(1)": (("B", "8"), ("D", ("0", "1"))),
    **{f"HA_{k}(1)": _ha_steps(k) for k in range(1, 8)},
    **{f"HD_{k}(1)": _hd_steps(k) for k in range(4, 8)},
    "X6": _hd_steps(4) + (("A",),),
    "Y5": _ha_steps(3) + (("B", "2"),),
    "Y4": _ha_steps(2) + (("B", "2"),),
    "Y3": _ha_steps(1) + (("B", "1"),),
    "Z4": _ha_steps(2) + (("B'", ("1", "2")),),
    "T2": _ha_steps(1) + (("T", 2),),
    "T1": _ha_steps(1) + (("T", 1),),
    "T0": _ha_steps(1) + (("T", 0),),
}


def recipe(target: str, cat: Catalog = None) -> Tuple[Tuple, ...]:
    cat = cat or _catalog.DEFAULT
    try:
        name = cat.get(target).name
    except UnknownName:
        raise UnknownTarget(f"no recipe for {target!r}") from None
    if name.startswith("H2("):
        return _ha_steps(1) + (("R2", int(name[3:-1])),)
    if name not in RECIPES:
        raise UnknownTarget(f"no recipe for {target!r}")
    return RECIPES[name]


def _shrink_towards(e: Embedding, goal: DynkinDiagram) -> Embedding:
    # single-edge pairs, highest indices first; the isomorphism check picks one
    pairs = [(i, j) for j in range(e.k) for i in range(j) if e.gram[i][j] == -1]
    for i, j in sorted(pairs, key=lambda p: (p[1], p[0]), reverse=True):
        out = principle_c(e, [i, j])
        if are_isomorphic(out.diagram, goal) is not None:
            return out
    raise EmbeddingError("no 2-chain shrinks to the requested diagram")


def prove_main(target: str, cat: Catalog = None) -> Embedding:
    """Embed a hyperbolic diagram (or ``H2(a)``) into E10 by replaying its recipe.

    Every step is certified; the result is checked to be isomorphic to the
    target's catalog diagram, and any failure raises.
    """
    cat = cat or _catalog.DEFAULT
    steps = recipe(target, cat)
    goal = cat.get(target)
    e10 = RootLattice.from_diagram(cat.get("E10").diagram)
    e = identity(e10)
    current = "E10"
    for step in steps:
        op = step[0]
        if op in ("A", "B", "B'", "T", "R2"):
            if current is None:
                raise EmbeddingError(f"cannot apply {op}: intermediate diagram is unnamed")
            entry = cat.get(current)
            if entry.base is None:
                raise EmbeddingError(f"{current} is not a hyperbolic extension")
            hx = hyperbolic_extension(cat.get(entry.base))
            outer = align(e, DynkinDiagram.from_gcm(hx.gcm, hx.labels))
            if op == "A":
                inner = principle_a(hx)
            elif op == "B":
                inner = principle_b(hx, step[1])
            elif op == "B'":
                inner = principle_b_prime(hx, step[1])
            elif op == "T":
                inner = _reembed(t_family(step[1]), hx)
            else:
                inner = _reembed(rank2_embedding(step[1]), hx)
            e = compose(outer, inner)
            current = cat.identify(e.diagram)
        elif op == "C":
            e = _shrink_towards(e, cat.get(step[1]).diagram)
            current = step[1]
        elif op == "D":
            e = principle_d(e, step[1])
            current = cat.identify(e.diagram)
        else:
            raise ValueError(f"unknown recipe step {op!r}")
    if are_isomorphic(e.diagram, goal.diagram) is None:
        raise EmbeddingError(f"{goal.name}: constructed diagram is not isomorphic to the target")
    return replace(e, target=goal.name)


def _reembed(e: Embedding, hx: RootLattice) -> Embedding:
    """Move an embedding onto an equal lattice built elsewhere (labels match)."""
    perm = [e.host.index(hx.label(i)) for i in range(hx.n)]
    roots = [tuple(r[perm[i]] for i in range(hx.n)) for r in e.roots]
    return check_root_subdiagram(hx, roots, e.labels, e.target, e.word)
