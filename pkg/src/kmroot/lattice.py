"""Root-lattice arithmetic for a symmetric generalized Cartan matrix."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

from . import exact
from .cartan import GCM, DiagramType, DynkinDiagram, Kind, classify, is_connected
from .errors import (
    HostMismatch,
    IndexOutOfRange,
    NegativeCoordinates,
    NormalizationFailed,
    NotAffine,
    NotNormTwo,
    SingularMatrix,
    TheoremHypothesisViolated,
)

Coords = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class RootLattice:
    """The root lattice of a symmetric GCM with form ``(a_i, a_j) = a_ij``."""

    gcm: GCM
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if not self.gcm.symmetric:
            raise ValueError("root lattices are only built for symmetric GCMs")
        if self.labels is not None and len(self.labels) != self.gcm.n:
            raise ValueError("one label per simple root required")

    @classmethod
    def from_diagram(cls, d: DynkinDiagram) -> "RootLattice":
        return cls(d.gcm(), d.labels)

    def __eq__(self, other):
        return isinstance(other, RootLattice) and self.gcm == other.gcm

    def __hash__(self):
        return hash(self.gcm)

    @property
    def n(self) -> int:
        return self.gcm.n

    @property
    def form(self):
        return self.gcm.entries

    @cached_property
    def diagram_type(self) -> DiagramType:
        return classify(self.gcm)

    @cached_property
    def in_norm_scope(self) -> bool:
        """Whether norm-2 vectors are exactly the real roots (finite/affine/hyperbolic)."""
        t = self.diagram_type
        return t.kind in (Kind.FINITE, Kind.AFFINE) or t.hyperbolic

    def index(self, label) -> int:
        """Position of a vertex: ints are positions, strings are labels."""
        if isinstance(label, int):
            if not 0 <= label < self.n:
                raise IndexOutOfRange(f"vertex {label} out of range 0..{self.n - 1}")
            return label
        if self.labels is None:
            return self.index(int(label))
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise IndexOutOfRange(f"no simple root labelled {label!r}") from None

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def simple_root(self, label) -> "RootVector":
        i = self.index(label)
        return RootVector(tuple(int(k == i) for k in range(self.n)), self)

    def vector(self, coeffs: Union[Sequence[int], Dict[str, int]]) -> "RootVector":
        """Build a vector from a coordinate sequence or a ``{label: coefficient}`` map."""
        if isinstance(coeffs, dict):
            c = [0] * self.n
            for lab, v in coeffs.items():
                c[self.index(lab)] += v
            return RootVector(tuple(c), self)
        return RootVector(tuple(int(v) for v in coeffs), self)

    def zero(self) -> "RootVector":
        return RootVector((0,) * self.n, self)


@dataclass(frozen=True)
class RootVector:
    coords: Coords
    host: RootLattice

    def __post_init__(self):
        if len(self.coords) != self.host.n:
            raise ValueError(f"expected {self.host.n} coordinates, got {len(self.coords)}")

    def _check(self, other: "RootVector"):
        if self.host != other.host:
            raise HostMismatch("vectors live in different lattices")

    def __add__(self, other):
        self._check(other)
        return RootVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.host)

    def __sub__(self, other):
        self._check(other)
        return RootVector(tuple(a - b for a, b in zip(self.coords, other.coords)), self.host)

    def __neg__(self):
        return RootVector(tuple(-a for a in self.coords), self.host)

    def __mul__(self, k: int):
        return RootVector(tuple(k * a for a in self.coords), self.host)

    __rmul__ = __mul__

    @property
    def height(self) -> int:
        return sum(self.coords)

    def norm(self) -> int:
        return pairing(self, self)

    def __repr__(self):
        terms = [f"{c}*a[{self.host.label(i)}]" for i, c in enumerate(self.coords) if c]
        return "RootVector(" + (" + ".join(terms) or "0") + ")"


@dataclass(frozen=True)
class WeightVector:
    """Exact rational combination of simple roots."""

    coords: Tuple[Fraction, ...]
    host: RootLattice

    def __add__(self, other):
        return WeightVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.host)

    def __sub__(self, other):
        return WeightVector(tuple(a - b for a, b in zip(self.coords, other.coords)), self.host)

    def __mul__(self, k):
        return WeightVector(tuple(k * a for a in self.coords), self.host)

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def to_root_vector(self) -> RootVector:
        if not self.is_integral():
            raise ValueError("weight is not in the root lattice")
        return RootVector(tuple(int(c) for c in self.coords), self.host)


def _form_product(form, x: Sequence, y: Sequence):
    n = len(form)
    total = 0
    for i in range(n):
        if x[i]:
            row = form[i]
            total += x[i] * sum(row[j] * y[j] for j in range(n) if y[j])
    return total


def pairing(x, y):
    """The invariant bilinear form ``sum_ij x_i a_ij y_j``.

    Works for any mix of root and weight vectors on the same host; the
    result is an ``int`` for root vectors and a ``Fraction`` otherwise.
    """
    if x.host != y.host:
        raise HostMismatch("vectors live in different lattices")
    return _form_product(x.host.form, x.coords, y.coords)


def coroot_pairing(x: RootVector, i: int) -> int:
    """``(x, alpha_i)`` without building the simple root."""
    return sum(c * a for c, a in zip(x.coords, x.host.form[i]))


def simple_reflection(i, x: RootVector) -> RootVector:
    host = x.host
    if isinstance(i, str):
        i = host.index(i)
    if not 0 <= i < host.n:
        raise IndexOutOfRange(f"vertex {i} out of range 0..{host.n - 1}")
    c = list(x.coords)
    c[i] -= coroot_pairing(x, i)
    return RootVector(tuple(c), host)


def reflect_by(beta: RootVector, x: RootVector) -> RootVector:
    if pairing(beta, beta) != 2:
        raise NotNormTwo("reflections are only defined for norm-2 vectors here")
    k = pairing(x, beta)
    return RootVector(tuple(a - k * b for a, b in zip(x.coords, beta.coords)), x.host)


def null_root(host: RootLattice) -> RootVector:
    """Primitive positive kernel vector of an affine (connected) host."""
    if host.diagram_type.kind is not Kind.AFFINE or not is_connected(host.gcm):
        raise NotAffine("null roots exist for connected affine hosts only")
    basis = exact.integer_kernel(host.form, host.n)
    if len(basis) != 1:
        raise NotAffine(f"kernel has rank {len(basis)}, expected 1")
    v = exact.primitive(basis[0])
    if v[0] < 0:
        v = tuple(-c for c in v)
    assert all(c > 0 for c in v), v
    if host.labels is not None and "0" in host.labels:
        if v[host.index("0")] != 1:
            raise NormalizationFailed(
                f"coefficient at node 0 is {v[host.index('0')]}, expected 1")
    return RootVector(v, host)


def fundamental_weights(host: RootLattice) -> List[WeightVector]:
    """The dual basis ``(L_i, a_j) = delta_ij``, exactly."""
    n = host.n
    out = []
    for i in range(n):
        e = [int(k == i) for k in range(n)]
        try:
            c = exact.solve(host.form, e)
        except ZeroDivisionError:
            raise SingularMatrix("host Cartan matrix is singular") from None
        out.append(WeightVector(c, host))
    return out


def _require_scope(host: RootLattice):
    if not host.in_norm_scope:
        raise TheoremHypothesisViolated(
            f"norm criterion needs finite, affine or hyperbolic type; host is "
            f"{host.diagram_type}")


def is_positive_real_root_norm(x: RootVector) -> bool:
    _require_scope(x.host)
    return all(c >= 0 for c in x.coords) and pairing(x, x) == 2


def descend(x: RootVector) -> Tuple[bool, List[int]]:
    """Reflect down to a simple root; return (reached, reflection indices used).

    At each step the lowest index ``i`` with ``(x, a_i) > 0`` is used.
    """
    if any(c < 0 for c in x.coords):
        raise NegativeCoordinates("descent starts from a nonnegative vector")
    host = x.host
    c = list(x.coords)
    trace: List[int] = []
    height = sum(c)
    while True:
        nonzero = [k for k, v in enumerate(c) if v]
        if len(nonzero) == 1 and c[nonzero[0]] == 1:
            return True, trace
        for i in range(host.n):
            p = sum(a * b for a, b in zip(c, host.form[i]))
            if p > 0:
                break
        else:
            return False, trace
        c[i] -= p
        trace.append(i)
        if c[i] < 0:
            return False, trace
        new_height = height - p
        assert new_height < height
        height = new_height


def is_positive_real_root_descent(x: RootVector) -> bool:
    return descend(x)[0]


def is_positive_real_root(x: RootVector) -> bool:
    """Norm test where it is valid, descent everywhere else."""
    if x.host.in_norm_scope:
        return is_positive_real_root_norm(x)
    return all(c >= 0 for c in x.coords) and is_positive_real_root_descent(x)


def _compositions(n: int, max_total: int) -> Iterable[Coords]:
    """Nonnegative integer vectors of length n with entry sum in 1..max_total."""
    def rec(k: int, left: int, acc: List[int]):
        if k == n - 1:
            for v in range(left + 1):
                acc.append(v)
                yield tuple(acc)
                acc.pop()
            return
        for v in range(left + 1):
            acc.append(v)
            yield from rec(k + 1, left - v, acc)
            acc.pop()
    for vec in rec(0, max_total, []):
        if any(vec):
            yield vec


def lattice_box(host: RootLattice, height: int) -> Iterable[RootVector]:
    """All nonzero nonnegative vectors of height at most ``height``."""
    for c in _compositions(host.n, height):
        yield RootVector(c, host)


def real_roots_up_to_height(host: RootLattice, height: int) -> Set[RootVector]:
    """Positive norm-2 vectors of height <= ``height`` (brute force over the box)."""
    _require_scope(host)
    form = host.form
    return {RootVector(c, host) for c in _compositions(host.n, height)
            if _form_product(form, c, c) == 2}


def real_roots_by_reflection(host: RootLattice, height: int) -> Set[RootVector]:
    """Positive real roots of height <= ``height`` by climbing from the simple roots.

    A height-increasing simple reflection is applied whenever ``(x, a_i) < 0``.
    Every positive real root descends to a simple root through strictly
    smaller heights, so the bounded climb reaches all of them.
    """
    start = [host.simple_root(i).coords for i in range(host.n)]
    seen: Set[Coords] = set(start)
    queue = deque(start)
    while queue:
        c = queue.popleft()
        h = sum(c)
        for i in range(host.n):
            p = sum(a * b for a, b in zip(c, host.form[i]))
            if p < 0 and h - p <= height:
                nxt = list(c)
                nxt[i] -= p
                nxt = tuple(nxt)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return {RootVector(c, host) for c in seen if sum(c) <= height}
