"""Rank classification of quadratic forms through their Gram matrix."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import DimensionError
from . import linalg
from .mpoly import MPoly


@dataclass(frozen=True)
class QuadricClass:
    gram_rank: int
    nvars: int

    @property
    def label(self) -> str:
        return quadric_label(self.gram_rank, self.nvars)

    @property
    def is_smooth(self) -> bool:
        return self.gram_rank == self.nvars and self.gram_rank > 0

    @property
    def is_cone(self) -> bool:
        return 0 < self.gram_rank < self.nvars


def quadric_label(rank: int, nvars: int) -> str:
    if rank == 0:
        return "zero"
    if rank == 1:
        return "double-hyperplane"
    if rank == 2:
        return "two-hyperplanes"
    if rank == nvars:
        return f"smooth-quadric-rank-{rank}"
    if rank == 3:
        return "cone-over-smooth-conic"
    return f"cone-over-smooth-quadric-rank-{rank}"


def gram_matrix(q: MPoly) -> list[list[Fraction]]:
    """Symmetric matrix ``G`` with ``q(z) = z^T G z``."""
    if not q.is_homogeneous(2):
        raise ValueError(f"quadratic form expected, got {q}")
    n = q.nvars
    g = [[Fraction(0)] * n for _ in range(n)]
    for mono, c in q.terms.items():
        idx = [i for i, e in enumerate(mono) for _ in range(e)]
        i, j = idx
        if i == j:
            g[i][i] += c
        else:
            g[i][j] += c / 2
            g[j][i] += c / 2
    return g


def gram_rank(q: MPoly) -> QuadricClass:
    if q.nvars == 0:
        raise DimensionError("quadratic form in zero variables")
    return QuadricClass(linalg.rank(gram_matrix(q)), q.nvars)
