"""Orthogonal complements of embeddings and direct-sum extensions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import List, Optional, Sequence, Tuple

from . import catalog as _catalog
from . import exact
from .catalog import Catalog
from .embed import Embedding, check_root_subdiagram
from .errors import NoExtension
from .lattice import Coords, RootLattice, RootVector, _require_scope, coroot_pairing

DEFAULT_BOUND = 10


@dataclass(frozen=True)
class SublatticeBasis:
    host: RootLattice
    basis: Tuple[Coords, ...]
    gram: Tuple[Tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def combine(self, coeffs: Sequence[int]) -> Coords:
        return tuple(sum(c * b[k] for c, b in zip(coeffs, self.basis))
                     for k in range(self.host.n))

    def positive_definite(self) -> bool:
        if not self.basis:
            return True
        minors = exact.leading_minors(self.gram)
        return len(minors) == self.rank and all(d > 0 for d in minors)


def orthogonal_sublattice(e: Embedding) -> SublatticeBasis:
    """Integer lattice basis of ``{x : (x, beta_i) = 0 for every root of e}``."""
    host = e.host
    rows = [[sum(r[k] * host.form[k][j] for k in range(host.n)) for j in range(host.n)]
            for r in e.roots]
    basis = [tuple(v) for v in exact.integer_kernel(rows, host.n)]
    if len(basis) == 1 and sum(basis[0]) < 0:
        basis = [tuple(-x for x in basis[0])]
    g = exact.gram(basis, host.form)
    return SublatticeBasis(host, tuple(basis), tuple(tuple(r) for r in g))


def _coefficient_bounds(sub: SublatticeBasis, norm: int, bound: int) -> List[int]:
    if not sub.positive_definite():
        return [bound] * sub.rank
    # |c_i|^2 <= norm * (G^-1)_ii for any c with c^T G c = norm
    out = []
    for i in range(sub.rank):
        e = [int(k == i) for k in range(sub.rank)]
        inv_ii = exact.solve(sub.gram, e)[i]
        lim = Fraction(norm) * inv_ii
        out.append(isqrt(lim.numerator // lim.denominator))
    return out


def find_orthogonal_real_roots(e: Embedding, bound: int = DEFAULT_BOUND) -> List[RootVector]:
    """Positive real roots of the host orthogonal to every root of ``e``.

    If the complement is positive definite the search is exhaustive and
    ``bound`` is ignored; otherwise coefficients range over ``[-bound, bound]``.
    """
    _require_scope(e.host)
    sub = orthogonal_sublattice(e)
    if sub.rank == 0:
        return []
    limits = _coefficient_bounds(sub, 2, bound)
    found = set()
    for coeffs in product(*[range(-b, b + 1) for b in limits]):
        if not any(coeffs):
            continue
        q = sum(coeffs[i] * sub.gram[i][j] * coeffs[j]
                for i in range(sub.rank) for j in range(sub.rank))
        if q != 2:
            continue
        v = sub.combine(coeffs)
        if all(x >= 0 for x in v):
            found.add(v)
    out = [RootVector(v, e.host) for v in sorted(found, key=lambda v: (sum(v), v))]
    for r in out:
        assert r.norm() == 2
        assert all(sum(x * y for x, y in zip(_row(e.host, b), r.coords)) == 0
                   for b in e.roots)
    return out


def _row(host: RootLattice, b: Coords) -> List[int]:
    return [sum(b[k] * host.form[k][j] for k in range(host.n)) for j in range(host.n)]


def weight_coordinates(v: RootVector) -> Tuple[int, ...]:
    """Coefficients of ``v`` in the fundamental-weight basis, i.e. ``(v, a_i)``."""
    return tuple(coroot_pairing(v, i) for i in range(v.host.n))


def _pick(roots: List[RootVector], target: Sequence[Sequence[int]]) -> Optional[List[RootVector]]:
    k = len(target)

    def rec(chosen: List[RootVector]):
        if len(chosen) == k:
            return list(chosen)
        j = len(chosen)
        for r in roots:
            if r in chosen:
                continue
            if all(_pair(r, chosen[i]) == target[j][i] for i in range(j)):
                res = rec(chosen + [r])
                if res:
                    return res
        return None

    return rec([])


def _pair(x: RootVector, y: RootVector) -> int:
    return sum(a * b for a, b in zip(_row(x.host, x.coords), y.coords))


def extend_direct_sum(e: Embedding, extra: str, bound: int = DEFAULT_BOUND,
                      cat: Catalog = None) -> Embedding:
    """Append orthogonal real roots realising the finite diagram ``extra``."""
    cat = cat or _catalog.DEFAULT
    entry = cat.get(extra)
    target = entry.gcm.entries
    chosen = _pick(find_orthogonal_real_roots(e, bound), target)
    if chosen is None:
        raise NoExtension(f"no orthogonal real roots realise {entry.name}")
    labels = list(e.labels) + [f"{entry.name}:{lab}" for lab in entry.labels]
    name = f"{e.target}+{entry.name}" if e.target else None
    out = check_root_subdiagram(e.host, list(e.roots) + [r.coords for r in chosen],
                                labels, name, e.word + (f"+{entry.name}",))
    k = e.k
    assert all(out.gram[i][j] == 0 for i in range(k) for j in range(k, out.k))
    assert [tuple(row[k:]) for row in out.gram[k:]] == [tuple(r) for r in target]
    return out
