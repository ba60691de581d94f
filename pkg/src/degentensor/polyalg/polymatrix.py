"""Matrices of polynomials: symbolic determinants and maximal minors."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from ..errors import DimensionError
from .mpoly import MPoly, evaluate


class PolyMatrix:
    """Rectangular grid of :class:`MPoly` over one common variable tuple."""

    __slots__ = ("variables", "rows")

    def __init__(self, rows: Sequence[Sequence[MPoly]], variables: Sequence[str] | None = None):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DimensionError("a PolyMatrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        if variables is None:
            variables = next(e.variables for r in rows for e in r if isinstance(e, MPoly))
        variables = tuple(variables)
        fixed = []
        for r in rows:
            out = []
            for e in r:
                if not isinstance(e, MPoly):
                    e = MPoly.constant(variables, e)
                elif e.variables != variables:
                    raise DimensionError("entries use different variable sets")
                out.append(e)
            fixed.append(tuple(out))
        self.variables = variables
        self.rows = tuple(fixed)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and self.variables == other.variables
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.variables, self.rows))

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix([list(c) for c in zip(*self.rows)], self.variables)

    def columns(self, cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([[row[c] for c in cols] for row in self.rows], self.variables)

    def evaluate(self, point: Sequence) -> list[list[Fraction]]:
        return [[evaluate(e, point) for e in row] for row in self.rows]

    def is_linear(self) -> bool:
        """True iff every entry is a linear form (homogeneous degree 1, or zero)."""
        return all(e.is_homogeneous(1) for row in self.rows for e in row)

    def coefficient_slices(self) -> list[list[list[Fraction]]]:
        """For a matrix of linear forms, the constant matrices ``d B / d x_k``."""
        n = len(self.variables)
        unit = [tuple(int(i == k) for i in range(n)) for k in range(n)]
        return [[[e.coefficient(unit[k]) for e in row] for row in self.rows] for k in range(n)]

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.rows)

    def __repr__(self):
        return f"PolyMatrix({[[str(e) for e in row] for row in self.rows]!r})"


def _expand(rows: list[tuple[MPoly, ...]], zero: MPoly) -> MPoly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    # expand along the sparsest row
    best = max(range(n), key=lambda i: sum(1 for e in rows[i] if e.is_zero()))
    total = zero
    others = rows[:best] + rows[best + 1:]
    for j, e in enumerate(rows[best]):
        if e.is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in others]
        term = e * _expand(minor, zero)
        total = total + term if (best + j) % 2 == 0 else total - term
    return total


def det(b: PolyMatrix) -> MPoly:
    """Exact symbolic determinant by cofactor expansion."""
    u, v = b.shape
    if u != v:
        raise DimensionError(f"determinant of non-square {u}x{v} matrix")
    return _expand(list(b.rows), MPoly.zero(b.variables))


def minor_indices(u: int, v: int) -> list[tuple[int, ...]]:
    """Column multi-indices of the maximal minors of a ``u x v`` matrix, lex order."""
    return list(combinations(range(v), u))


def maximal_minors(b: PolyMatrix) -> list[MPoly]:
    """All ``C(v, u)`` maximal minors of a ``u x v`` matrix with ``u <= v``."""
    u, v = b.shape
    if u > v:
        raise DimensionError(f"{u}x{v} matrix has more rows than columns; transpose first")
    return [det(b.columns(cols)) for cols in minor_indices(u, v)]
