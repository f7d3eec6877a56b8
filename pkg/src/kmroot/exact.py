"""Exact integer and rational linear algebra on small dense matrices.

Everything here works on plain nested sequences of Python ints (or
``Fraction`` where noted). Matrices are at most a dozen rows, so the
cubic algorithms below are plenty fast and never touch floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

Matrix = Sequence[Sequence[int]]


def det(m: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination with row pivoting."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def leading_minors(m: Matrix) -> List[int]:
    """Leading principal minors d_1..d_n, stopping after the first zero.

    Bareiss elimination without pivoting leaves the k-th leading minor on
    the diagonal at step k; a zero pivot ends the run, so the returned list
    may be shorter than n (its last element is then 0).
    """
    n = len(m)
    a = [list(row) for row in m]
    out: List[int] = []
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        out.append(pivot)
        if pivot == 0:
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return out


def principal_submatrix(m: Matrix, idx: Sequence[int]) -> List[List[int]]:
    return [[m[i][j] for j in idx] for i in idx]


def solve(m: Matrix, rhs: Sequence[int]) -> Tuple[Fraction, ...]:
    """Solve ``m x = rhs`` exactly over the rationals.

    Raises ``ZeroDivisionError`` when ``m`` is singular.
    """
    n = len(m)
    a = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(m)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[p] = a[p], a[c]
        inv = 1 / a[c][c]
        a[c] = [v * inv for v in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return tuple(a[r][n] for r in range(n))


def primitive(v: Sequence[int]) -> Tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def hermite_rows(rows: Sequence[Sequence[int]]) -> List[List[int]]:
    """Row Hermite normal form of the integer row lattice spanned by ``rows``.

    Zero rows are dropped. Pivots are positive and the entries above each
    pivot are reduced into ``[0, pivot)``.
    """
    a = [list(r) for r in rows]
    if not a:
        return []
    ncols = len(a[0])
    out: List[List[int]] = []
    for c in range(ncols):
        live = [r for r in a if r[c] != 0]
        rest = [r for r in a if r[c] == 0]
        if not live:
            continue
        # gcd-reduce the column with unimodular row operations
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[c]))
            piv = live[0]
            nxt = [piv]
            for r in live[1:]:
                q = r[c] // piv[c]
                r = [x - q * y for x, y in zip(r, piv)]
                if r[c] != 0:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            live = nxt
        piv = live[0]
        if piv[c] < 0:
            piv = [-x for x in piv]
        for i, prow in enumerate(out):
            q = prow[c] // piv[c]
            if q:
                out[i] = [x - q * y for x, y in zip(prow, piv)]
        out.append(piv)
        a = [r for r in rest if any(r)]
    return out


def integer_kernel(m: Matrix, ncols: int) -> List[List[int]]:
    """A lattice basis of ``{x in Z^ncols : m x = 0}``.

    Column operations on ``[m; I]`` keep the identity block unimodular, so
    the columns that end up zero in the ``m`` block span the full integer
    kernel (it is saturated, not just a finite-index sublattice). The basis
    is returned in Hermite normal form.
    """
    nrows = len(m)
    # work with columns as lists: column j = (m[.][j], e_j)
    cols = [[m[i][j] for i in range(nrows)] + [int(k == j) for k in range(ncols)]
            for j in range(ncols)]
    start = 0
    for r in range(nrows):
        live = [j for j in range(start, ncols) if cols[j][r] != 0]
        while len(live) > 1:
            live.sort(key=lambda j: abs(cols[j][r]))
            p = live[0]
            for j in live[1:]:
                q = cols[j][r] // cols[p][r]
                cols[j] = [x - q * y for x, y in zip(cols[j], cols[p])]
            live = [j for j in live if cols[j][r] != 0]
        if live:
            p = live[0]
            cols[start], cols[p] = cols[p], cols[start]
            start += 1
    basis = [c[nrows:] for c in cols[start:]]
    return hermite_rows(basis)


def matmul(a: Matrix, b: Matrix) -> List[List[int]]:
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def gram(vectors: Sequence[Sequence[int]], form: Matrix) -> List[List[int]]:
    """Matrix of pairings ``v_i^T form v_j``."""
    tmp = [[sum(v[k] * form[k][j] for k in range(len(v))) for j in range(len(form))]
           for v in vectors]
    return [[sum(x * y for x, y in zip(t, w)) for w in vectors] for t in tmp]
