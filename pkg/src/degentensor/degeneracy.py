"""Kernel triples, degeneracy certificates and small hyperdeterminants.

A hypermatrix is degenerate when its trilinear form has a kernel triple
``(P, Q, T)``: ``Q^T L(P) = 0``, ``P^T N(T) = 0`` and ``M(Q) T = 0``.
Certificates are built over the rationals and always re-verified.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, FormatError, PreconditionError, ZeroTensorError
from .polyalg import binary, linalg
from .polyalg.polymatrix import det
from .polyalg.quadric import gram_matrix
from .schemes import PointDiagnosis, ProjPoint, points_on_p1, tensor_scheme
from .tensor_core import Axis, Tensor3, assoc_matrix, contract

log = logging.getLogger(__name__)

DEGENERATE_CERTIFIED = "degenerate-with-certificate"
DEGENERATE_UNCERTIFIED = "degenerate-without-certificate"
NON_DEGENERATE = "non-degenerate-proven"
UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class KernelTriple:
    P: ProjPoint
    Q: ProjPoint
    T: ProjPoint

    def permuted(self, order: Sequence[int]) -> "KernelTriple":
        pts = (self.P, self.Q, self.T)
        return KernelTriple(*(pts[a] for a in order))


@dataclass(frozen=True)
class DegeneracyVerdict:
    status: str
    reason: str
    certificate: KernelTriple | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def is_degenerate(self) -> bool | None:
        if self.status in (DEGENERATE_CERTIFIED, DEGENERATE_UNCERTIFIED):
            return True
        if self.status == NON_DEGENERATE:
            return False
        return None


def verify_kernel_triple(a: Tensor3, t: KernelTriple) -> bool:
    """True iff all ``p + q + r`` kernel equations hold exactly."""
    p, q, r = a.shape
    if (len(t.P), len(t.Q), len(t.T)) != (p, q, r):
        raise DimensionError(f"triple of lengths {(len(t.P), len(t.Q), len(t.T))} for format {a.shape}")
    lp = contract(a, Axis.X, t.P.coords)           # q x r
    eq1 = linalg.matvec(linalg.transpose(lp), t.Q.coords)    # Q^T L(P)
    eq2 = linalg.matvec(lp, t.T.coords)            # (P^T N(T))^T = L(P) T
    eq3 = linalg.matvec(contract(a, Axis.Y, t.Q.coords), t.T.coords)  # M(Q) T
    return not any(eq1) and not any(eq2) and not any(eq3)


def _sort_order(shape: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(range(3), key=lambda ax: shape[ax]))


def _inverse_order(order: Sequence[int]) -> tuple[int, ...]:
    inv = [0, 0, 0]
    for new, old in enumerate(order):
        inv[old] = new
    return tuple(inv)


def _first_axis_order(axis: Axis) -> tuple[int, int, int]:
    return (int(axis),) + tuple(ax for ax in range(3) if ax != axis)


def _complete_through_first(b: Tensor3, point: ProjPoint) -> KernelTriple | None:
    """Search ``(Q, T)`` completing ``point`` (on the first axis of ``b``) to a kernel triple.

    ``C = L(point)``. If ``C`` has a one-dimensional left kernel the second
    point is forced and the third solves ``[C; M(Q)] T = 0``; symmetrically
    for a one-dimensional right kernel. Larger kernels are probed along basis
    vectors, which may miss solutions.
    """
    c = contract(b, Axis.X, point.coords)
    left = linalg.left_nullspace(c)
    right = linalg.nullspace(c)

    def through_q(qv):
        stack = c + contract(b, Axis.Y, qv)
        sols = linalg.nullspace(stack)
        return KernelTriple(point, ProjPoint(qv), ProjPoint(sols[0])) if sols else None

    def through_t(tv):
        stack = linalg.transpose(c) + contract(b, Axis.Z, tv)
        sols = linalg.nullspace(stack)
        return KernelTriple(point, ProjPoint(sols[0]), ProjPoint(tv)) if sols else None

    if not left or not right:
        return None
    candidates = []
    if len(left) == 1:
        candidates.append((through_q, left[0]))
    if len(right) == 1:
        candidates.append((through_t, right[0]))
    candidates += [(through_q, v) for v in left] + [(through_t, v) for v in right]
    for fn, vec in candidates:
        triple = fn(vec)
        if triple is not None and verify_kernel_triple(b, triple):
            return triple
    return None


def kernel_triple_through(a: Tensor3, axis: Axis, point) -> KernelTriple | None:
    """Kernel triple whose ``axis`` component is ``point``, if one is found."""
    axis = Axis.parse(axis)
    point = point if isinstance(point, ProjPoint) else ProjPoint(point)
    order = _first_axis_order(axis)
    b = a.permute(order)
    triple = _complete_through_first(b, point)
    if triple is None:
        return None
    out = triple.permuted(_inverse_order(order))
    assert verify_kernel_triple(a, out)
    return out


def certificate_from_point(a: Tensor3, axis: Axis, point) -> KernelTriple | None:
    """Kernel triple from a degenerate, non-bi-degenerate point of a scheme.

    With ``C`` the associated matrix evaluated at the point (rank exactly
    ``u - 1``), the kernel on the short side of ``C`` is a single projective
    point; the third point solves the stacked linear system built from ``C``
    and the associated matrix evaluated at that forced point.
    """
    axis = Axis.parse(axis)
    point = point if isinstance(point, ProjPoint) else ProjPoint(point)
    diag = tensor_scheme(a, axis).diagnose(point)
    if not diag.on_scheme:
        raise PreconditionError(f"{point} is not on the {axis.prefix}-scheme")
    if diag.bidegenerate:
        raise PreconditionError(f"{point} is bi-degenerate on the {axis.prefix}-scheme")
    if not diag.degenerate:
        raise PreconditionError(f"{point} is not a degenerate point of the {axis.prefix}-scheme")
    order = _first_axis_order(axis)
    b = a.permute(order)
    c = contract(b, Axis.X, point.coords)
    left = linalg.left_nullspace(c)
    right = linalg.nullspace(c)
    if len(left) == 1:
        qv = left[0]
        sols = linalg.nullspace(c + contract(b, Axis.Y, qv))
        triple = KernelTriple(point, ProjPoint(qv), ProjPoint(sols[0])) if sols else None
    else:
        tv = right[0]
        sols = linalg.nullspace(linalg.transpose(c) + contract(b, Axis.Z, tv))
        triple = KernelTriple(point, ProjPoint(sols[0]), ProjPoint(tv)) if sols else None
    if triple is None:
        log.warning("stacked system at %s has full rank; no certificate", point)
        return None
    out = triple.permuted(_inverse_order(order))
    if not verify_kernel_triple(a, out):
        return None
    return out


def _matrix_format_verdict(a: Tensor3) -> DegeneracyVerdict:
    """Formats with a dimension 1: the form is bilinear in the other two."""
    order = _sort_order(a.shape)
    b = a.permute(order)
    m = contract(b, Axis.X, [1])
    left, right = linalg.left_nullspace(m), linalg.nullspace(m)
    if left and right:
        t = KernelTriple(ProjPoint([1]), ProjPoint(left[0]), ProjPoint(right[0]))
        t = t.permuted(_inverse_order(order))
        assert verify_kernel_triple(a, t)
        return DegeneracyVerdict(DEGENERATE_CERTIFIED, "matrix-format-kernel", t)
    return DegeneracyVerdict(NON_DEGENERATE, "matrix-format-full-rank")


def _candidate_points(pts, dim: int) -> Iterable[ProjPoint]:
    if pts.whole_line:
        yield from (ProjPoint(v) for v in ([1, 0], [0, 1], [1, 1], [1, -1], [1, 2]))
    else:
        yield from pts.rational_points


def _p2_verdict(a: Tensor3, order) -> DegeneracyVerdict:
    """Sorted format ``(2, q, r)``: decide through the scheme of L in P^1."""
    b = a.permute(order)
    p, q, r = b.shape
    pts = points_on_p1(tensor_scheme(b, Axis.X))
    inv = _inverse_order(order)
    if pts.is_empty:
        return DegeneracyVerdict(NON_DEGENERATE, "L-empty")
    if r >= p + q - 1:
        for pt in _candidate_points(pts, p):
            t = kernel_triple_through(b, Axis.X, pt)
            if t is not None:
                return DegeneracyVerdict(DEGENERATE_CERTIFIED, "L-nonempty-certificate-from-L-point",
                                         t.permuted(inv))
        return DegeneracyVerdict(DEGENERATE_UNCERTIFIED, "degenerate-no-rational-certificate")
    # interior: (2, q, q); the discriminant of det L decides
    value = schlafli_binary(b)
    if value:
        return DegeneracyVerdict(NON_DEGENERATE, "schlafli-discriminant-nonzero")
    for pt in _candidate_points(pts, p):
        t = kernel_triple_through(b, Axis.X, pt)
        if t is not None:
            return DegeneracyVerdict(DEGENERATE_CERTIFIED, "schlafli-discriminant-zero-certificate-from-L-point",
                                     t.permuted(inv))
    return DegeneracyVerdict(DEGENERATE_UNCERTIFIED, "schlafli-discriminant-zero")


def _hint_outcome(a: Tensor3, axis: Axis, point: ProjPoint) -> tuple[KernelTriple | None, str]:
    try:
        diag: PointDiagnosis = tensor_scheme(a, axis).diagnose(point)
    except (DimensionError, ValueError) as exc:
        return None, f"hint {axis.prefix}{point}: invalid ({exc})"
    tag = f"hint {axis.prefix}{point}"
    if not diag.on_scheme:
        return None, f"{tag}: not on scheme"
    if diag.bidegenerate:
        return None, f"{tag}: bi-degenerate, no conclusion"
    if not diag.degenerate:
        return None, f"{tag}: not degenerate"
    cert = certificate_from_point(a, axis, point)
    if cert is None:
        return None, f"{tag}: stacked system has full rank"
    return cert, f"{tag}: certificate built"


def decide_degeneracy(a: Tensor3, hints: Sequence[tuple[Axis, object]] | None = None) -> DegeneracyVerdict:
    """Decide whether ``a`` is degenerate as far as exact methods allow.

    Formats with a 2 among the dimensions are decided through the scheme of
    L in P^1 (and the binary discriminant in the interior ``(2, q, q)``
    case). Otherwise only hint points can certify degeneracy; a
    degenerate, non-bi-degenerate hint yields a kernel triple, anything
    else leaves the verdict undetermined.
    """
    if a.is_zero():
        raise ZeroTensorError("degeneracy of the zero hypermatrix is not defined here")
    order = _sort_order(a.shape)
    p = a.shape[order[0]]
    if p == 1:
        base = _matrix_format_verdict(a)
    elif p == 2:
        base = _p2_verdict(a, order)
    else:
        base = DegeneracyVerdict(UNDETERMINED, "no-decision-procedure-for-format")
    if base.status == DEGENERATE_CERTIFIED or not hints:
        return base
    notes = []
    for axis, point in hints:
        axis = Axis.parse(axis)
        point = point if isinstance(point, ProjPoint) else ProjPoint(point)
        cert, note = _hint_outcome(a, axis, point)
        notes.append(note)
        if cert is not None:
            if base.status == NON_DEGENERATE:
                raise AssertionError(f"certificate {cert} contradicts verdict {base.reason}")
            return DegeneracyVerdict(DEGENERATE_CERTIFIED, f"certificate-built-from-{axis.prefix}-point",
                                     cert, tuple(notes))
    return DegeneracyVerdict(base.status, base.reason, base.certificate, tuple(notes))


# -- explicit hyperdeterminants ----------------------------------------------


def hyperdet_222(a: Tensor3) -> Fraction:
    """Cayley's hyperdeterminant of a ``(2, 2, 2)`` hypermatrix."""
    if a.shape != (2, 2, 2):
        raise FormatError(f"format (2,2,2) required, got {a.shape}")

    def e(i, j, k):
        return a[i - 1, j - 1, k - 1]

    a111, a112, a121, a122 = e(1, 1, 1), e(1, 1, 2), e(1, 2, 1), e(1, 2, 2)
    a211, a212, a221, a222 = e(2, 1, 1), e(2, 1, 2), e(2, 2, 1), e(2, 2, 2)
    squares = (a111**2 * a222**2 + a112**2 * a221**2
               + a121**2 * a212**2 + a122**2 * a211**2)
    mixed = (a111 * a112 * a221 * a222 + a111 * a121 * a212 * a222
             + a111 * a122 * a211 * a222 + a112 * a121 * a212 * a221
             + a112 * a122 * a221 * a211 + a121 * a122 * a212 * a211)
    cross = a111 * a122 * a212 * a221 + a112 * a121 * a211 * a222
    return squares - 2 * mixed + 4 * cross


def schlafli_binary(a: Tensor3, return_flag: bool = False):
    """Discriminant of ``det L`` for a ``(2, q, q)`` hypermatrix.

    With ``return_flag`` the result is ``(value, det_l_vanishes)``; when
    ``det L`` is identically zero the value is reported as 0.
    """
    p, q, r = a.shape
    if p != 2 or q != r:
        raise FormatError(f"format (2,q,q) required, got {a.shape}")
    dl = det(assoc_matrix(a, Axis.X))
    if dl.is_zero():
        value, flag = Fraction(0), True
    elif q == 1:
        # a linear form has no repeated root
        value, flag = Fraction(1), False
    else:
        value, flag = binary.discriminant_binary(dl), False
    return (value, flag) if return_flag else value


def conic_discriminant_223(a: Tensor3) -> Fraction:
    """Determinant of the Gram matrix of the conic ``det N`` (format (2,2,3))."""
    if a.shape != (2, 2, 3):
        raise FormatError(f"format (2,2,3) required, got {a.shape}")
    return linalg.det(gram_matrix(det(assoc_matrix(a, Axis.Z))))
