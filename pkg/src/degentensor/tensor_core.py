"""Tridimensional hypermatrices over the rationals.

A :class:`Tensor3` of format ``(p, q, r)`` holds the entries ``a_ijk``.
Python indexing is 0-based (``A[i, j, k]`` is ``a_{i+1, j+1, k+1}``);
:meth:`Tensor3.from_entries` accepts the 1-based ``a_ijk`` labels.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DimensionError, SingularMatrixError, ZeroTensorError
from .polyalg import linalg
from .polyalg.mpoly import MPoly, as_fraction, variable_names
from .polyalg.polymatrix import PolyMatrix


class Axis(enum.IntEnum):
    X = 0
    Y = 1
    Z = 2

    @classmethod
    def parse(cls, text) -> "Axis":
        if isinstance(text, Axis):
            return text
        try:
            return cls[str(text).strip().upper()]
        except KeyError:
            raise ValueError(f"unknown axis {text!r}; expected x, y or z") from None

    @property
    def prefix(self) -> str:
        return "xyz"[self]


class Tensor3:
    """Immutable ``(p, q, r)`` hypermatrix of Fractions."""

    __slots__ = ("shape", "entries")

    def __init__(self, entries: Sequence[Sequence[Sequence]]):
        p = len(entries)
        if p == 0 or not entries[0] or not entries[0][0]:
            raise DimensionError("every dimension must be positive")
        q, r = len(entries[0]), len(entries[0][0])
        rows = []
        for plane in entries:
            if len(plane) != q or any(len(line) != r for line in plane):
                raise DimensionError("ragged hypermatrix")
            rows.append(tuple(tuple(as_fraction(v) for v in line) for line in plane))
        self.shape = (p, q, r)
        self.entries = tuple(rows)

    @classmethod
    def zeros(cls, p: int, q: int, r: int) -> "Tensor3":
        return cls([[[0] * r for _ in range(q)] for _ in range(p)])

    @classmethod
    def from_entries(cls, shape: Sequence[int], values: Mapping[tuple[int, int, int], object]) -> "Tensor3":
        """Build from 1-based ``{(i, j, k): a_ijk}``; missing entries are zero."""
        p, q, r = shape
        grid = [[[Fraction(0)] * r for _ in range(q)] for _ in range(p)]
        for (i, j, k), v in values.items():
            if not (1 <= i <= p and 1 <= j <= q and 1 <= k <= r):
                raise DimensionError(f"index {(i, j, k)} outside format {tuple(shape)}")
            grid[i - 1][j - 1][k - 1] = as_fraction(v)
        return cls(grid)

    @classmethod
    def from_z_slices(cls, slices: Sequence[Sequence[Sequence]]) -> "Tensor3":
        """Build from the ``r`` z-slices, each a ``p x q`` matrix."""
        r = len(slices)
        p, q = len(slices[0]), len(slices[0][0])
        return cls([[[slices[k][i][j] for k in range(r)] for j in range(q)] for i in range(p)])

    @property
    def p(self) -> int:
        return self.shape[0]

    @property
    def q(self) -> int:
        return self.shape[1]

    @property
    def r(self) -> int:
        return self.shape[2]

    def __getitem__(self, ijk) -> Fraction:
        i, j, k = ijk
        return self.entries[i][j][k]

    def __eq__(self, other):
        return isinstance(other, Tensor3) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"Tensor3(shape={self.shape}, z_slices={self.z_slices_str()})"

    def z_slices_str(self) -> str:
        return str([[[str(self[i, j, k]) for j in range(self.q)] for i in range(self.p)]
                    for k in range(self.r)])

    def is_zero(self) -> bool:
        return not any(v for plane in self.entries for line in plane for v in line)

    def to_lists(self) -> list:
        return [[list(line) for line in plane] for plane in self.entries]

    def permute(self, order: Sequence[int]) -> "Tensor3":
        """Tensor ``B`` with ``B[idx[order[0]], idx[order[1]], idx[order[2]]] = A[idx]``.

        ``order`` lists, for each new axis, the old axis it comes from.
        """
        order = tuple(order)
        if sorted(order) != [0, 1, 2]:
            raise ValueError(f"not a permutation: {order}")
        dims = [self.shape[a] for a in order]
        grid = [[[None] * dims[2] for _ in range(dims[1])] for _ in range(dims[0])]
        for i in range(self.p):
            for j in range(self.q):
                for k in range(self.r):
                    old = (i, j, k)
                    a, b, c = (old[order[0]], old[order[1]], old[order[2]])
                    grid[a][b][c] = self.entries[i][j][k]
        return Tensor3(grid)


def _check_zero(a: Tensor3) -> None:
    if a.is_zero():
        raise ZeroTensorError("the zero hypermatrix is not supported here")


def slice_matrix(a: Tensor3, axis: Axis, index: int) -> list[list[Fraction]]:
    """The slice obtained by fixing the given (0-based) index along ``axis``."""
    axis = Axis.parse(axis)
    p, q, r = a.shape
    if not 0 <= index < a.shape[axis]:
        raise IndexError(f"slice index {index} outside 0..{a.shape[axis] - 1}")
    if axis is Axis.X:
        return [[a[index, j, k] for k in range(r)] for j in range(q)]
    if axis is Axis.Y:
        return [[a[i, index, k] for k in range(r)] for i in range(p)]
    return [[a[i, j, index] for j in range(q)] for i in range(p)]


def combine_slices(a: Tensor3, axis: Axis, e: Sequence[Sequence]) -> Tensor3:
    """Change coordinates along ``axis``: new slice ``l`` is ``sum_k e[k][l] * slice_k``."""
    axis = Axis.parse(axis)
    e = linalg.to_matrix(e)
    n = a.shape[axis]
    if linalg.shape(e) != (n, n):
        raise DimensionError(f"change matrix must be {n}x{n}")
    if linalg.rank(e) < n:
        raise SingularMatrixError("change of coordinates is not invertible")
    p, q, r = a.shape
    grid = [[[Fraction(0)] * r for _ in range(q)] for _ in range(p)]
    for i in range(p):
        for j in range(q):
            for k in range(r):
                idx = (i, j, k)
                total = Fraction(0)
                for s in range(n):
                    coeff = e[s][idx[axis]]
                    if coeff:
                        src = list(idx)
                        src[axis] = s
                        total += coeff * a[tuple(src)]
                grid[i][j][k] = total
    return Tensor3(grid)


@dataclass(frozen=True)
class Flattening:
    axis: Axis
    matrix: tuple[tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return linalg.rank(self.matrix)


def flattening(a: Tensor3, axis: Axis) -> Flattening:
    """Flattenings of shape ``(p, qr)``, ``(q, pr)``, ``(pq, r)``.

    For X the entry ``a_ijk`` sits in row ``i``, column ``j*r + k``; Y puts it in
    row ``j``, column ``i*r + k``; Z in row ``i*q + j``, column ``k``.
    """
    axis = Axis.parse(axis)
    p, q, r = a.shape
    if axis is Axis.X:
        m = [[a[i, j, k] for j in range(q) for k in range(r)] for i in range(p)]
    elif axis is Axis.Y:
        m = [[a[i, j, k] for i in range(p) for k in range(r)] for j in range(q)]
    else:
        m = [[a[i, j, k] for k in range(r)] for i in range(p) for j in range(q)]
    return Flattening(axis, tuple(tuple(row) for row in m))


def index_ranks(a: Tensor3) -> tuple[int, int, int]:
    """The x-, y- and z-ranks (ranks of the three flattenings)."""
    return tuple(flattening(a, ax).rank for ax in Axis)


@dataclass(frozen=True)
class EssentialFormat:
    p: int
    q: int
    r: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)

    def __iter__(self):
        return iter(self.as_tuple())

    def __str__(self):
        return f"({self.p},{self.q},{self.r})"


def essential_format(a: Tensor3) -> EssentialFormat:
    return EssentialFormat(*index_ranks(a))


def is_concise(a: Tensor3) -> bool:
    return essential_format(a).as_tuple() == a.shape


def _slice_vectors(a: Tensor3, axis: Axis) -> list[list[Fraction]]:
    return [[x for row in slice_matrix(a, axis, s) for x in row] for s in range(a.shape[axis])]


def reduce_to_essential(a: Tensor3) -> tuple[Tensor3, tuple[list[list[Fraction]], ...]]:
    """Push every linear dependency among slices into trailing zero slices.

    Returns the reduced tensor and the change matrices ``(C, D, E)`` applied
    to the x-, y- and z-slices (in that order) via :func:`combine_slices`.
    """
    _check_zero(a)
    changes = []
    current = a
    for axis in Axis:
        vecs = _slice_vectors(current, axis)
        n = len(vecs)
        # columns of the change matrix: independent completion, then relations
        relations = linalg.left_nullspace(vecs)
        keep = linalg.complete_basis(relations, n)
        cols = keep + relations
        e = linalg.transpose(cols)
        current = combine_slices(current, axis, e)
        changes.append(e)
    return current, tuple(changes)


def assoc_matrix(a: Tensor3, axis: Axis) -> PolyMatrix:
    """L (axis X, q x r in x), M (axis Y, p x r in y) or N (axis Z, p x q in z)."""
    axis = Axis.parse(axis)
    p, q, r = a.shape
    names = variable_names(axis.prefix, a.shape[axis])
    n = len(names)

    def form(coeffs):
        return MPoly(names, {tuple(int(t == s) for t in range(n)): c for s, c in enumerate(coeffs)})

    if axis is Axis.X:
        rows = [[form([a[i, j, k] for i in range(p)]) for k in range(r)] for j in range(q)]
    elif axis is Axis.Y:
        rows = [[form([a[i, j, k] for j in range(q)]) for k in range(r)] for i in range(p)]
    else:
        rows = [[form([a[i, j, k] for k in range(r)]) for j in range(q)] for i in range(p)]
    return PolyMatrix(rows, names)


def poly_pa(a: Tensor3) -> MPoly:
    """The trihomogeneous polynomial ``sum a_ijk x_i y_j z_k``."""
    p, q, r = a.shape
    names = variable_names("x", p) + variable_names("y", q) + variable_names("z", r)
    terms = {}
    for i in range(p):
        for j in range(q):
            for k in range(r):
                if a[i, j, k]:
                    mono = [0] * (p + q + r)
                    mono[i] = 1
                    mono[p + j] = 1
                    mono[p + q + k] = 1
                    terms[tuple(mono)] = a[i, j, k]
    return MPoly(names, terms)


def eval_fa(a: Tensor3, x: Sequence, y: Sequence, z: Sequence) -> Fraction:
    """Value of the trilinear form ``f_A`` at ``(x, y, z)``."""
    p, q, r = a.shape
    if (len(x), len(y), len(z)) != (p, q, r):
        raise DimensionError(f"vectors of lengths {(len(x), len(y), len(z))} for format {a.shape}")
    x = [as_fraction(v) for v in x]
    y = [as_fraction(v) for v in y]
    z = [as_fraction(v) for v in z]
    return sum((a[i, j, k] * x[i] * y[j] * z[k]
                for i in range(p) for j in range(q) for k in range(r)), Fraction(0))


def contract(a: Tensor3, axis: Axis, vector: Sequence) -> list[list[Fraction]]:
    """Numeric specialization of the associated matrix: ``L(P)``, ``M(Q)`` or ``N(T)``."""
    axis = Axis.parse(axis)
    vec = [as_fraction(v) for v in vector]
    if len(vec) != a.shape[axis]:
        raise DimensionError(f"vector of length {len(vec)} along axis of size {a.shape[axis]}")
    out = None
    for s, c in enumerate(vec):
        if not c:
            continue
        sl = slice_matrix(a, axis, s)
        if out is None:
            out = [[c * x for x in row] for row in sl]
        else:
            out = [[o + c * x for o, x in zip(orow, row)] for orow, row in zip(out, sl)]
    if out is None:
        sl = slice_matrix(a, axis, 0)
        out = [[Fraction(0)] * len(sl[0]) for _ in sl]
    return out
