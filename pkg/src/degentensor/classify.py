"""Classification of ``(2, 2, r)`` hypermatrices by their associated schemes.

``classify_222``, ``classify_223`` and ``classify_22r`` follow the three
step-by-step procedures for formats ``(2,2,2)``, ``(2,2,3)`` and
``(2,2,r >= 4)``. Each branch records an identifier in ``branch_trace``.
:func:`classify` sorts the axes so that ``p <= q <= r`` and dispatches;
other formats get a partial report.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Sequence

from .degeneracy import DegeneracyVerdict, decide_degeneracy
from .errors import FormatError, ZeroTensorError
from .polyalg import binary
from .polyalg.mpoly import MPoly
from .polyalg.polymatrix import det
from .polyalg.quadric import gram_rank
from .schemes import P1Points, points_on_p1, tensor_scheme
from .tensor_core import Axis, EssentialFormat, Tensor3, assoc_matrix, essential_format


@dataclass(frozen=True)
class AnalysisReport:
    format: tuple[int, int, int]
    degeneracy: DegeneracyVerdict
    concise: bool
    essential_format: EssentialFormat
    det_zero: bool | None = None
    tensor_rank: int | None = None
    canonical_type: str | None = None
    schemes: dict = field(default_factory=dict)
    branch_trace: tuple[str, ...] = ()
    axis_permutation: tuple[int, int, int] = (0, 1, 2)

    @property
    def degenerate(self) -> bool | None:
        return self.degeneracy.is_degenerate

    def summary(self) -> dict:
        """Report fields that do not depend on the chosen coordinates."""
        return {
            "format": self.format,
            "det_zero": self.det_zero,
            "degenerate": self.degenerate,
            "concise": self.concise,
            "essential_format": self.essential_format.as_tuple(),
            "tensor_rank": self.tensor_rank,
            "canonical_type": self.canonical_type,
            "schemes": dict(self.schemes),
        }


class UnexpectedBranch(RuntimeError):
    """The scheme data matches none of the algorithm's cases."""


def _require(a: Tensor3, fmt_ok: bool, wanted: str) -> None:
    if not fmt_ok:
        raise FormatError(f"format {wanted} required, got {a.shape}")
    if a.is_zero():
        raise ZeroTensorError("the zero hypermatrix has no classification")


def _root_kind(f: MPoly) -> str:
    """'zero', 'distinct' or 'double' for a binary quadratic form."""
    if f.is_zero():
        return "zero"
    return "double" if binary.discriminant_binary(f) == 0 else "distinct"


def _p1(a: Tensor3, axis: Axis) -> P1Points:
    return points_on_p1(tensor_scheme(a, axis))


def _finish(a, *, det_zero, concise, fess, trk, ctype, schemes, trace,
            hints=None) -> AnalysisReport:
    verdict = decide_degeneracy(a, hints)
    return AnalysisReport(
        format=a.shape,
        degeneracy=verdict,
        concise=concise,
        essential_format=EssentialFormat(*fess),
        det_zero=det_zero,
        tensor_rank=trk,
        canonical_type=ctype,
        schemes=schemes,
        branch_trace=tuple(trace),
    )


def classify_222(a: Tensor3) -> AnalysisReport:
    _require(a, a.shape == (2, 2, 2), "(2,2,2)")
    trace = ["alg1.step1"]
    dets = {ax: det(assoc_matrix(a, ax)) for ax in Axis}
    kinds = {ax: _root_kind(dets[ax]) for ax in Axis}
    schemes = {name: _p1(a, ax).describe() for name, ax in zip("LMN", Axis)}
    common = dict(schemes=schemes, trace=trace)
    if kinds[Axis.X] == "distinct":
        trace.append("alg1.step1.two-distinct-roots")
        return _finish(a, det_zero=False, concise=True, fess=(2, 2, 2), trk=2,
                       ctype="IV", **common)
    trace.append("alg1.step1.double-or-zero")
    trace.append("alg1.step2")
    values = sorted(kinds.values())
    if values == ["double"] * 3:
        trace.append("alg1.step2.three-double-roots")
        return _finish(a, det_zero=True, concise=True, fess=(2, 2, 2), trk=3,
                       ctype="III", **common)
    if values == ["double", "zero", "zero"]:
        trace.append("alg1.step2.two-vanish-one-double")
        axis = next(ax for ax in Axis if kinds[ax] == "double")
        fess = [2, 2, 2]
        fess[axis] = 1
        ctype = {Axis.X: "IIc", Axis.Y: "IIb", Axis.Z: "IIa"}[axis]
        return _finish(a, det_zero=True, concise=False, fess=tuple(fess), trk=2,
                       ctype=ctype, **common)
    if values == ["zero"] * 3:
        trace.append("alg1.step2.all-vanish")
        return _finish(a, det_zero=True, concise=False, fess=(1, 1, 1), trk=1,
                       ctype="I", **common)
    raise UnexpectedBranch(f"determinant root kinds {kinds} fit no case")


def classify_223(a: Tensor3) -> AnalysisReport:
    _require(a, a.shape == (2, 2, 3), "(2,2,3)")
    trace = ["alg2.step1"]
    conic = gram_rank(det(assoc_matrix(a, Axis.Z)))
    lpts, mpts = _p1(a, Axis.X), _p1(a, Axis.Y)
    schemes = {"L": lpts.describe(), "M": mpts.describe(), "N": conic.label}
    common = dict(schemes=schemes, trace=trace)
    if conic.gram_rank == 3:
        trace.append("alg2.step1.smooth-conic")
        return _finish(a, det_zero=False, concise=True, fess=(2, 2, 3), trk=3,
                       ctype="VI", **common)
    trace.append("alg2.step1.singular-or-zero")
    trace.append("alg2.step2")
    if conic.gram_rank == 2:
        mults = lpts.multiplicities
        if lpts.whole_line:
            raise UnexpectedBranch("two-line conic with L the whole line")
        if mults == (1,):
            trace.append("alg2.step2.L-one-point")
            return _finish(a, det_zero=True, concise=True, fess=(2, 2, 3), trk=3,
                           ctype="V", **common)
        if mults == (1, 1):
            trace.append("alg2.step2.L-two-points")
            return _finish(a, det_zero=True, concise=False, fess=(2, 2, 2), trk=2,
                           ctype="IV-embedded", **common)
        raise UnexpectedBranch(f"two-line conic with L multiplicities {mults}")
    trace.append("alg2.step2.not-two-lines")
    trace.append("alg2.step3")
    if conic.gram_rank == 1:
        if lpts.multiplicities == (2,):
            trace.append("alg2.step3.L-double-point")
            return _finish(a, det_zero=True, concise=False, fess=(2, 2, 2), trk=3,
                           ctype="III", **common)
        if lpts.whole_line:
            trace.append("alg2.step3.L-whole-line")
            return _finish(a, det_zero=True, concise=False, fess=(2, 2, 1), trk=2,
                           ctype="IIa", **common)
        raise UnexpectedBranch(f"double-line conic with L {lpts.describe()}")
    trace.append("alg2.step3.not-double-line")
    trace.append("alg2.step4")
    return _step_det_n_zero(a, lpts, mpts, trace, schemes, "alg2.step4", det_zero=True)


def _step_det_n_zero(a, lpts, mpts, trace, schemes, step, det_zero):
    common = dict(schemes=schemes, trace=trace)
    if lpts.whole_line and mpts.whole_line:
        trace.append(f"{step}.L-and-M-whole-line")
        return _finish(a, det_zero=det_zero, concise=False, fess=(1, 1, 1), trk=1,
                       ctype="I", **common)
    if lpts.whole_line and mpts.multiplicities == (2,):
        trace.append(f"{step}.M-double-point")
        return _finish(a, det_zero=det_zero, concise=False, fess=(2, 1, 2), trk=2,
                       ctype="IIb", **common)
    if mpts.whole_line and lpts.multiplicities == (2,):
        trace.append(f"{step}.L-double-point")
        return _finish(a, det_zero=det_zero, concise=False, fess=(1, 2, 2), trk=2,
                       ctype="IIc", **common)
    raise UnexpectedBranch(f"det N = 0 with L {lpts.describe()}, M {mpts.describe()}")


def classify_22r(a: Tensor3) -> AnalysisReport:
    p, q, r = a.shape
    _require(a, (p, q) == (2, 2) and r >= 4, "(2,2,r) with r >= 4")
    trace = ["alg3.step1"]
    quad = gram_rank(det(assoc_matrix(a, Axis.Z)))
    lpts, mpts = _p1(a, Axis.X), _p1(a, Axis.Y)
    schemes = {"L": lpts.describe(), "M": mpts.describe(), "N": quad.label}
    common = dict(schemes=schemes, trace=trace)
    rk = quad.gram_rank
    if rk == 4 and r == 4:
        trace.append("alg3.step1.smooth-quadric")
        return _finish(a, det_zero=None, concise=True, fess=(2, 2, 4), trk=4,
                       ctype="concise-(2,2,4)", **common)
    if rk == 4:
        trace.append("alg3.step1.cone-over-smooth-quadric")
        return _finish(a, det_zero=None, concise=False, fess=(2, 2, 4), trk=4,
                       ctype="concise-(2,2,4)", **common)
    trace.append("alg3.step1.not-concise")
    trace.append("alg3.step2")
    if rk == 3:
        trace.append("alg3.step2.cone-over-smooth-conic")
        return _finish(a, det_zero=None, concise=False, fess=(2, 2, 3), trk=3,
                       ctype="VI", **common)
    trace.append("alg3.step2.degenerate")
    trace.append("alg3.step3")
    if rk == 2:
        mults = lpts.multiplicities
        if not lpts.whole_line and mults == (1,):
            trace.append("alg3.step3.L-simple-point")
            return _finish(a, det_zero=None, concise=False, fess=(2, 2, 3), trk=3,
                           ctype="V", **common)
        if not lpts.whole_line and mults == (1, 1):
            trace.append("alg3.step3.L-two-points")
            return _finish(a, det_zero=None, concise=False, fess=(2, 2, 2), trk=2,
                           ctype="IV-embedded", **common)
        raise UnexpectedBranch(f"two hyperplanes with L {lpts.describe()}")
    trace.append("alg3.step3.not-two-hyperplanes")
    trace.append("alg3.step4")
    if rk == 1:
        if lpts.multiplicities == (2,):
            trace.append("alg3.step4.L-double-point")
            return _finish(a, det_zero=None, concise=False, fess=(2, 2, 2), trk=3,
                           ctype="III", **common)
        if lpts.whole_line:
            trace.append("alg3.step4.L-whole-line")
            return _finish(a, det_zero=None, concise=False, fess=(2, 2, 1), trk=2,
                           ctype="IIa", **common)
        raise UnexpectedBranch(f"double hyperplane with L {lpts.describe()}")
    trace.append("alg3.step4.det-N-vanishes")
    trace.append("alg3.step5")
    return _step_det_n_zero(a, lpts, mpts, trace, schemes, "alg3.step5", det_zero=None)


def _sorting_permutation(shape: Sequence[int]) -> tuple[int, int, int]:
    return tuple(sorted(range(3), key=lambda ax: shape[ax]))


def _permute_hints(hints, order):
    if not hints:
        return None
    new_axis = {old: new for new, old in enumerate(order)}
    return [(Axis(new_axis[Axis.parse(ax)]), pt) for ax, pt in hints]


def classify(a: Tensor3, hints: Sequence | None = None) -> AnalysisReport:
    """Sort axes to ``p <= q <= r`` and run the matching procedure.

    ``hints`` are ``(axis, point)`` pairs in the caller's axis labels; they
    are only consulted for formats without a complete procedure. Format,
    schemes and trace refer to the sorted frame; the certificate, if any,
    is expressed in the caller's axes.
    """
    if a.is_zero():
        raise ZeroTensorError("the zero hypermatrix has no classification")
    order = _sorting_permutation(a.shape)
    b = a.permute(order)
    p, q, r = b.shape
    if (p, q) == (2, 2):
        if r == 2:
            rep = classify_222(b)
        elif r == 3:
            rep = classify_223(b)
        else:
            rep = classify_22r(b)
    else:
        verdict = decide_degeneracy(b, _permute_hints(hints, order))
        fess = essential_format(b)
        det_zero = None
        if p >= 2 and r <= p + q - 1:
            det_zero = verdict.is_degenerate
        rep = AnalysisReport(
            format=b.shape,
            degeneracy=verdict,
            concise=fess.as_tuple() == b.shape,
            essential_format=fess,
            det_zero=det_zero,
            branch_trace=("partial-report",),
        )
    verdict = rep.degeneracy
    if verdict.certificate is not None:
        # certificates are reported in the caller's axes
        inv = tuple(order.index(ax) for ax in range(3))
        verdict = replace(verdict, certificate=verdict.certificate.permuted(inv))
    return replace(rep, degeneracy=verdict, axis_permutation=order)
