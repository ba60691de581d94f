"""Exact polynomial algebra: sparse polynomials, polynomial matrices,
binary forms and quadratic forms over the rationals."""

from .binary import (
    discriminant_binary,
    gcd_binary,
    resultant_binary,
    root_structure,
    squarefree_structure,
)
from .mpoly import (
    MPoly,
    as_fraction,
    evaluate,
    monomials_of_degree,
    partial,
    polynomial_ring,
    substitute,
    variable_names,
)
from .polymatrix import PolyMatrix, det, maximal_minors, minor_indices
from .quadric import QuadricClass, gram_matrix, gram_rank

__all__ = [
    "MPoly", "PolyMatrix", "QuadricClass",
    "as_fraction", "evaluate", "partial", "substitute", "polynomial_ring",
    "variable_names", "monomials_of_degree",
    "det", "maximal_minors", "minor_indices",
    "resultant_binary", "discriminant_binary", "gcd_binary",
    "squarefree_structure", "root_structure",
    "gram_matrix", "gram_rank",
]
