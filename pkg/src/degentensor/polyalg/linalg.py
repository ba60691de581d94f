"""Exact linear algebra over the rationals.

Matrices are plain lists of rows of :class:`fractions.Fraction`. Rank and
determinant use fraction-free (Bareiss) elimination on integer rows; kernels
use reduced row echelon form.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from ..errors import DimensionError, SingularMatrixError
from .mpoly import as_fraction

Matrix = list[list[Fraction]]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[as_fraction(x) for x in row] for row in rows]


def shape(m: Sequence[Sequence]) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def transpose(m: Sequence[Sequence]) -> Matrix:
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    if shape(a)[1] != len(b):
        raise DimensionError(f"cannot multiply {shape(a)} by {shape(b)}")
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def _integer_rows(m: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in m:
        row = [as_fraction(x) for x in row]
        den = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * den) for x in row])
    return out


def rank(m: Sequence[Sequence]) -> int:
    """Exact rank by Bareiss elimination."""
    rows = _integer_rows(m)
    if not rows or not rows[0]:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        for i in range(r + 1, nrows):
            a = rows[i][c]
            rows[i] = [(p * rows[i][j] - a * rows[r][j]) // prev for j in range(ncols)]
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def det(m: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square rational matrix."""
    n, k = shape(m)
    if n != k:
        raise DimensionError(f"determinant of non-square {n}x{k} matrix")
    if n == 0:
        return Fraction(1)
    fr = [[as_fraction(x) for x in row] for row in m]
    rows = _integer_rows(fr)
    # the per-row scaling multiplies det by the product of row lcms
    scale = 1
    for row in fr:
        scale *= lcm(*(x.denominator for x in row))
    sign = 1
    prev = 1
    for c in range(n - 1):
        pivot = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            sign = -sign
        p = rows[c][c]
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                rows[i][j] = (p * rows[i][j] - rows[i][c] * rows[c][j]) // prev
            rows[i][c] = 0
        prev = p
    return Fraction(sign * rows[n - 1][n - 1], scale)


def rref(m: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    a = to_matrix(m)
    nrows, ncols = shape(a)
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def nullspace(m: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{v : m v = 0}``; ``ncols`` is needed when ``m`` has no rows."""
    if ncols is None:
        ncols = shape(m)[1]
    if not m:
        return identity(ncols)
    a, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(a, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def left_nullspace(m: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of ``{w : w^T m = 0}``."""
    return nullspace(transpose(m), ncols=len(m))


def inverse(m: Sequence[Sequence]) -> Matrix:
    n, k = shape(m)
    if n != k:
        raise DimensionError("inverse of a non-square matrix")
    aug = [list(row) + ident for row, ident in zip(to_matrix(m), identity(n))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [row[n:] for row in red]


def complete_basis(vectors: Sequence[Sequence], dim: int) -> list[list[Fraction]]:
    """Standard basis vectors that extend ``vectors`` to a basis of Q^dim."""
    chosen = [to_matrix([v])[0] for v in vectors]
    extra = []
    for i in range(dim):
        e = [Fraction(int(j == i)) for j in range(dim)]
        if rank(chosen + extra + [e]) > len(chosen) + len(extra):
            extra.append(e)
    return extra
