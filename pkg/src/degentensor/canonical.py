"""Canonical ``(2, 2, r)`` hypermatrices and the two worked ``(3, 3, 4)`` examples.

Each canonical form is written through its nonzero 1-based entries
``a_ijk``; the comment on each gives the associated matrices it produces.
"""

from __future__ import annotations

from .tensor_core import Tensor3

# (2,2,2): L, M, N all of one shape per type
CANONICAL_222 = {
    "I": {(1, 1, 1): 1},                        # L = [[x1,0],[0,0]]
    "IIa": {(1, 1, 1): 1, (2, 2, 1): 1},        # N = [[z1,0],[0,z1]], F_ess (2,2,1)
    "IIb": {(1, 1, 1): 1, (2, 1, 2): 1},        # M = [[y1,0],[0,y1]], F_ess (2,1,2)
    "IIc": {(1, 1, 1): 1, (1, 2, 2): 1},        # L = [[x1,0],[0,x1]], F_ess (1,2,2)
    "III": {(1, 1, 2): 1, (1, 2, 1): 1, (2, 1, 1): 1},  # L = [[x2,x1],[x1,0]]
    "IV": {(1, 1, 1): 1, (2, 2, 2): 1},         # L = [[x1,0],[0,x2]]
}

# (2,2,3)
CANONICAL_223 = {
    "I": {(1, 1, 1): 1},                                    # N = [[z1,0],[0,0]]
    "IIa": {(1, 1, 1): 1, (2, 2, 1): 1},                    # N = [[z1,0],[0,z1]]
    "IIb": {(1, 1, 1): 1, (2, 1, 2): 1},                    # N = [[z1,0],[z2,0]], M double point
    "IIc": {(1, 1, 1): 1, (1, 2, 2): 1},                    # N = [[z1,z2],[0,0]], L double point
    "III": {(1, 1, 1): 1, (1, 2, 2): 1, (2, 1, 2): 1},      # N = [[z1,z2],[z2,0]]
    "IV": {(1, 1, 1): 1, (2, 2, 2): 1},                     # N = [[z1,0],[0,z2]]
    "Va": {(1, 1, 1): 1, (1, 2, 2): 1, (2, 2, 3): 1},       # L = [[x1,0,0],[0,x1,x2]]
    "Vb": {(1, 1, 1): 1, (2, 1, 2): 1, (2, 2, 3): 1},       # L = [[x1,x2,0],[0,0,x2]]
    "VI": {(1, 1, 1): 1, (1, 2, 2): 1, (2, 1, 2): 1, (2, 2, 3): 1},  # N = [[z1,z2],[z2,z3]]
}

# concise (2,2,4): N = [[z1,z4],[z2,z3]], det N = z1 z3 - z2 z4
CANONICAL_224 = {(1, 1, 1): 1, (1, 2, 4): 1, (2, 1, 2): 1, (2, 2, 3): 1}

# (3,3,4) examples given by their z-slices
EXAMPLE_3_10_Z_SLICES = [
    [[1, 1, 1], [0, 1, 1], [1, 0, 2]],
    [[0, 1, 2], [1, 0, 1], [0, 1, 1]],
    [[1, 1, 2], [0, -1, 0], [0, 0, 0]],
    [[1, 2, 1], [1, 1, 1], [1, 1, 1]],
]
EXAMPLE_3_11_Z_SLICES = [
    [[1, 0, 0], [0, 0, 1], [1, 0, 0]],
    [[0, 0, 1], [0, 1, 0], [0, 0, 0]],
    [[0, 0, 0], [0, 0, 0], [0, 0, 1]],
    [[0, 1, 0], [1, 0, 0], [0, 0, 0]],
]

# three 2x2 slices along the long axis; index ranks {3, 2, 2}
RANK_EXAMPLE_Z_SLICES = [
    [[1, 0], [0, 1]],
    [[0, 1], [1, 0]],
    [[1, 1], [1, 0]],
]


def canonical(fmt: str, name: str) -> Tensor3:
    """``canonical("222", "III")``, ``canonical("223", "VI")``, ``canonical("224", "concise")``."""
    if fmt == "222":
        return Tensor3.from_entries((2, 2, 2), CANONICAL_222[name])
    if fmt == "223":
        return Tensor3.from_entries((2, 2, 3), CANONICAL_223[name])
    if fmt == "224" and name == "concise":
        return Tensor3.from_entries((2, 2, 4), CANONICAL_224)
    raise KeyError(f"no canonical form {fmt}/{name}")


def pad_z(a: Tensor3, r: int) -> Tensor3:
    """Append zero z-slices up to ``r``."""
    p, q, r0 = a.shape
    return Tensor3([[list(a.entries[i][j]) + [0] * (r - r0) for j in range(q)] for i in range(p)])


def example_3_10() -> Tensor3:
    return Tensor3.from_z_slices(EXAMPLE_3_10_Z_SLICES)


def example_3_11() -> Tensor3:
    return Tensor3.from_z_slices(EXAMPLE_3_11_Z_SLICES)


def rank_example() -> Tensor3:
    return Tensor3.from_z_slices(RANK_EXAMPLE_Z_SLICES)
