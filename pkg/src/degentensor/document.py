"""JSON tensor documents and report rendering.

A tensor document looks like::

    {"shape": [2, 2, 2],
     "entries": [[[1, 0], [0, 0]], [[0, 0], [0, "1/2"]]],
     "provenance": "...",
     "hints": [{"axis": "z", "point": [0, 1]}]}

Values are integers or strings ``"num/den"``. ``provenance`` and ``hints``
are optional.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Any

from .degeneracy import (DEGENERATE_CERTIFIED, DEGENERATE_UNCERTIFIED, NON_DEGENERATE,
                         DegeneracyVerdict, KernelTriple)
from .schemes import PointDiagnosis, ProjPoint
from .tensor_core import Axis, Tensor3


class DocumentError(ValueError):
    """Malformed tensor document; ``position`` says where."""

    def __init__(self, message: str, position: str):
        super().__init__(f"{position}: {message}")
        self.position = position


@dataclass
class TensorDocument:
    tensor: Tensor3
    provenance: str | None = None
    hints: list[tuple[Axis, ProjPoint]] = field(default_factory=list)


def _value(v: Any, where: str) -> Fraction:
    if isinstance(v, bool) or isinstance(v, float):
        raise DocumentError(f"expected an integer or a \"num/den\" string, got {v!r}", where)
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v.strip())
        except (ValueError, ZeroDivisionError):
            raise DocumentError(f"cannot read {v!r} as a rational", where) from None
    raise DocumentError(f"expected a number, got {type(v).__name__}", where)


def _shape(raw: Any) -> tuple[int, int, int]:
    if (not isinstance(raw, list) or len(raw) != 3
            or any(isinstance(d, bool) or not isinstance(d, int) or d < 1 for d in raw)):
        raise DocumentError(f"shape must be three positive integers, got {raw!r}", "shape")
    return tuple(raw)


def _entries(raw: Any, shape: tuple[int, int, int]) -> list:
    def check_list(obj, n, where):
        if not isinstance(obj, list):
            raise DocumentError("expected a list", where)
        if len(obj) != n:
            raise DocumentError(f"expected {n} items, found {len(obj)}", where)

    p, q, r = shape
    check_list(raw, p, "entries")
    out = []
    for i, plane in enumerate(raw):
        check_list(plane, q, f"entries[{i}]")
        rows = []
        for j, line in enumerate(plane):
            check_list(line, r, f"entries[{i}][{j}]")
            rows.append([_value(v, f"entries[{i}][{j}][{k}]") for k, v in enumerate(line)])
        out.append(rows)
    return out


def parse_hint(text: str) -> tuple[Axis, ProjPoint]:
    """Read ``"axis:c1,c2,..."``."""
    axis, sep, coords = text.partition(":")
    if not sep:
        raise DocumentError(f"hint {text!r} must look like axis:c1,c2,...", "hint")
    try:
        return Axis.parse(axis), ProjPoint.parse(coords)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(str(exc), f"hint {text!r}") from None


def _hints(raw: Any) -> list[tuple[Axis, ProjPoint]]:
    if not isinstance(raw, list):
        raise DocumentError("expected a list", "hints")
    out = []
    for n, h in enumerate(raw):
        where = f"hints[{n}]"
        if not isinstance(h, dict) or set(h) != {"axis", "point"} or not isinstance(h["point"], list):
            raise DocumentError('expected {"axis": ..., "point": [...]}', where)
        try:
            axis = Axis.parse(h["axis"])
        except ValueError as exc:
            raise DocumentError(str(exc), where + ".axis") from None
        coords = [_value(v, f"{where}.point[{k}]") for k, v in enumerate(h["point"])]
        try:
            out.append((axis, ProjPoint(coords)))
        except ValueError as exc:
            raise DocumentError(str(exc), where + ".point") from None
    return out


def parse_document(text: str) -> TensorDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(raw, dict):
        raise DocumentError("top level must be an object", "document")
    for key in ("shape", "entries"):
        if key not in raw:
            raise DocumentError(f"missing key {key!r}", "document")
    unknown = set(raw) - {"shape", "entries", "provenance", "hints"}
    if unknown:
        raise DocumentError(f"unknown keys {sorted(unknown)}", "document")
    shape = _shape(raw["shape"])
    tensor = Tensor3(_entries(raw["entries"], shape))
    prov = raw.get("provenance")
    if prov is not None and not isinstance(prov, str):
        raise DocumentError("expected a string", "provenance")
    hints = _hints(raw.get("hints", []))
    return TensorDocument(tensor, prov, hints)


def load_document(path) -> TensorDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DocumentError(exc.strerror or str(exc), str(path)) from None
    return parse_document(text)


def rational_json(v: Fraction):
    """Integers stay integers; other rationals become ``"num/den"``."""
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else str(v)


def document_dict(doc: TensorDocument) -> dict:
    out = {
        "shape": list(doc.tensor.shape),
        "entries": [[[rational_json(v) for v in line] for line in plane] for plane in doc.tensor.entries],
    }
    if doc.provenance is not None:
        out["provenance"] = doc.provenance
    if doc.hints:
        out["hints"] = [{"axis": ax.prefix, "point": [rational_json(c) for c in pt]}
                        for ax, pt in doc.hints]
    return out


def serialize_document(doc: TensorDocument) -> str:
    """Stable layout: one line per fiber ``entries[i][j]``."""
    d = document_dict(doc)
    planes = []
    for plane in d["entries"]:
        lines = ",\n".join("      " + json.dumps(line) for line in plane)
        planes.append("    [\n" + lines + "\n    ]")
    parts = ['  "shape": ' + json.dumps(d["shape"]), '  "entries": [\n' + ",\n".join(planes) + "\n  ]"]
    for key in ("provenance", "hints"):
        if key in d:
            parts.append("  " + json.dumps(key) + ": " + json.dumps(d[key]))
    return "{\n" + ",\n".join(parts) + "\n}\n"


# -- corpus ------------------------------------------------------------------


def corpus_names() -> list[str]:
    root = resources.files("degentensor") / "corpus"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def corpus_path(name: str):
    return resources.files("degentensor") / "corpus" / f"{name}.json"


def load_corpus(name: str) -> TensorDocument:
    return parse_document(corpus_path(name).read_text(encoding="utf-8"))


# -- reports -----------------------------------------------------------------

_DEGENERATE_WORD = {
    DEGENERATE_CERTIFIED: "certified",
    DEGENERATE_UNCERTIFIED: "uncertified",
    NON_DEGENERATE: "non-degenerate",
}


def point_json(pt: ProjPoint) -> list[str]:
    return [str(c) for c in pt]


def triple_json(t: KernelTriple | None):
    if t is None:
        return None
    return {"P": point_json(t.P), "Q": point_json(t.Q), "T": point_json(t.T)}


def verdict_json(v: DegeneracyVerdict) -> dict:
    return {
        "status": v.status,
        "reason": v.reason,
        "certificate": triple_json(v.certificate),
        "notes": list(v.notes),
    }


def report_dict(report, version: str) -> dict:
    """Report document with a fixed key order."""
    verdict = report.degeneracy
    return {
        "tool": "degentensor",
        "version": version,
        "format": list(report.format),
        "axis_permutation": list(report.axis_permutation),
        "degenerate": _DEGENERATE_WORD.get(verdict.status, "undetermined"),
        "degeneracy": verdict_json(verdict),
        "det_zero": report.det_zero,
        "concise": report.concise,
        "essential_format": list(report.essential_format.as_tuple()),
        "trk": report.tensor_rank,
        "canonical_type": report.canonical_type,
        "schemes": dict(report.schemes),
        "branch_trace": list(report.branch_trace),
    }


def diagnosis_dict(d: PointDiagnosis, axis: Axis, point: ProjPoint) -> dict:
    return {
        "axis": axis.prefix,
        "point": point_json(point),
        "on_scheme": d.on_scheme,
        "rank_at": d.rank_at,
        "jacobian_rank": d.jacobian_rank,
        "expected_codim": d.expected_codim,
        "degenerate": d.degenerate,
        "bidegenerate": d.bidegenerate,
    }
