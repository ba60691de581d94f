"""Determinantal schemes cut out by the maximal minors of a matrix of linear forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import DimensionError, FormatError
from .polyalg import binary, linalg
from .polyalg.mpoly import MPoly, as_fraction, evaluate
from .polyalg.polymatrix import PolyMatrix, det, maximal_minors, minor_indices
from .polyalg.quadric import QuadricClass, gram_rank
from .tensor_core import Axis, Tensor3, assoc_matrix


class ProjPoint:
    """A point of projective space, scaled so its first nonzero coordinate is 1."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        vals = [as_fraction(c) for c in coords]
        lead = next((c for c in vals if c), None)
        if lead is None:
            raise ValueError("the zero vector is not a projective point")
        self.coords = tuple(c / lead for c in vals)

    @classmethod
    def parse(cls, text: str) -> "ProjPoint":
        return cls([Fraction(t.strip()) for t in text.split(",")])

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"ProjPoint{self}"


@dataclass(frozen=True)
class PointDiagnosis:
    on_scheme: bool
    rank_at: int
    jacobian_rank: int
    expected_codim: int
    degenerate: bool
    bidegenerate: bool


class DetScheme:
    """Scheme of the maximal minors of ``B`` (transposed on entry so ``u <= v``)."""

    def __init__(self, b: PolyMatrix):
        if not b.is_linear():
            raise ValueError("a determinantal scheme needs a matrix of linear forms")
        if b.shape[0] > b.shape[1]:
            b = b.transpose()
        self.matrix = b
        self.u, self.v = b.shape
        self.n = len(b.variables)

    @property
    def variables(self):
        return self.matrix.variables

    def expected_codim(self) -> int:
        return min(self.v - self.u + 1, self.n)

    @cached_property
    def minors(self) -> list[MPoly]:
        return maximal_minors(self.matrix)

    @cached_property
    def jacobian(self) -> list[list[MPoly]]:
        """Rows indexed by minors (lex column order), columns by variables."""
        return [[m.partial(k) for k in range(self.n)] for m in self.minors]

    def _point(self, point) -> ProjPoint:
        if not isinstance(point, ProjPoint):
            point = ProjPoint(point)
        if len(point) != self.n:
            raise DimensionError(f"point has {len(point)} coordinates, scheme lives in P^{self.n - 1}")
        return point

    def jacobian_at(self, point) -> list[list[Fraction]]:
        point = self._point(point)
        return [[evaluate(d, point.coords) for d in row] for row in self.jacobian]

    def diagnose(self, point) -> PointDiagnosis:
        point = self._point(point)
        rank_at = linalg.rank(self.matrix.evaluate(point.coords))
        jac_rank = linalg.rank(self.jacobian_at(point))
        on = rank_at < self.u
        expected = self.expected_codim()
        return PointDiagnosis(
            on_scheme=on,
            rank_at=rank_at,
            jacobian_rank=jac_rank,
            expected_codim=expected,
            degenerate=on and jac_rank < expected,
            bidegenerate=on and rank_at <= self.u - 2,
        )


def expected_codim(s: DetScheme) -> int:
    return s.expected_codim()


def diagnose_point(s: DetScheme, point) -> PointDiagnosis:
    return s.diagnose(point)


def jacobian_by_rows(b: PolyMatrix, point) -> list[list[Fraction]]:
    """Jacobian of the maximal minors at ``point`` via row-replacement sums.

    ``d_k B_alpha`` is the sum over rows ``i`` of the determinant of the
    ``alpha`` columns of ``B(point)`` with row ``i`` replaced by the
    coefficients of ``x_k`` in that row.
    """
    if b.shape[0] > b.shape[1]:
        b = b.transpose()
    u, v = b.shape
    vals = b.evaluate(list(point))
    coeff = b.coefficient_slices()
    out = []
    for cols in minor_indices(u, v):
        sub = [[row[c] for c in cols] for row in vals]
        row_out = []
        for ck in coeff:
            total = Fraction(0)
            for i in range(u):
                m = [list(r) for r in sub]
                m[i] = [ck[i][c] for c in cols]
                total += linalg.det(m)
            row_out.append(total)
        out.append(row_out)
    return out


@dataclass(frozen=True)
class P1Points:
    """Zero locus in P^1 of a family of binary forms, read off their GCD."""

    whole_line: bool
    gcd: MPoly
    points: tuple[tuple[ProjPoint, int], ...] = ()
    irrational: tuple[tuple[int, int], ...] = ()

    @property
    def multiplicities(self) -> tuple[int, ...]:
        if self.whole_line:
            return ()
        mults = [m for _, m in self.points]
        for count, m in self.irrational:
            mults.extend([m] * count)
        return tuple(sorted(mults, reverse=True))

    @property
    def is_empty(self) -> bool:
        return not self.whole_line and not self.multiplicities

    @property
    def rational_points(self) -> list[ProjPoint]:
        return [pt for pt, _ in self.points]

    def describe(self) -> str:
        if self.whole_line:
            return "whole-line"
        mults = self.multiplicities
        if not mults:
            return "empty"
        names = {(1,): "one simple point", (2,): "double point", (1, 1): "two simple points"}
        if mults in names:
            return names[mults]
        return "points with multiplicities " + ",".join(map(str, mults))


def points_on_p1(s: DetScheme) -> P1Points:
    if s.n != 2:
        raise DimensionError(f"scheme lives in P^{s.n - 1}, not P^1")
    g = binary.gcd_binary(s.minors)
    if g.is_zero():
        return P1Points(True, g)
    if g.degree() == 0:
        return P1Points(False, g)
    pts, blocks = binary.root_structure(g)
    return P1Points(
        False, g,
        tuple((ProjPoint(c), m) for c, m in pts),
        tuple(blocks),
    )


def tensor_scheme(a: Tensor3, axis: Axis) -> DetScheme:
    return DetScheme(assoc_matrix(a, axis))


def classify_detn_quadric(a: Tensor3) -> QuadricClass:
    """Gram-rank class of ``det N`` for a ``(2, 2, r)`` hypermatrix."""
    if a.shape[:2] != (2, 2):
        raise FormatError(f"format (2,2,r) required, got {a.shape}")
    return gram_rank(det(assoc_matrix(a, Axis.Z)))
