"""Command-line front end.

    degentensor analyze PATH [--hint axis:c1,c2,...]... [--json | --text]
    degentensor scheme PATH --axis z --point 1,1,0,-1
    degentensor hyperdet PATH

Exit codes: 0 success, 2 input error, 3 zero tensor, 4 unsupported format.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .classify import classify
from .degeneracy import hyperdet_222, schlafli_binary
from .document import (DocumentError, diagnosis_dict, load_document, parse_hint,
                       report_dict)
from .errors import DimensionError, ZeroTensorError
from .schemes import ProjPoint, tensor_scheme
from .tensor_core import Axis

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_ZERO = 3
EXIT_UNSUPPORTED = 4


def _fail(message: str, code: int) -> int:
    print(f"degentensor: {message}", file=sys.stderr)
    return code


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _text(doc: dict) -> str:
    lines = []
    for key, value in doc.items():
        if isinstance(value, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {k}: {json.dumps(v)}" for k, v in value.items())
        else:
            lines.append(f"{key}: {json.dumps(value)}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    doc = load_document(args.path)
    hints = list(doc.hints) + [parse_hint(h) for h in args.hint]
    try:
        report = classify(doc.tensor, hints)
    except ZeroTensorError as exc:
        return _fail(str(exc), EXIT_ZERO)
    out = report_dict(report, __version__)
    if args.text:
        print(_text(out))
    else:
        _emit(out)
    return EXIT_OK


def cmd_scheme(args) -> int:
    doc = load_document(args.path)
    if doc.tensor.is_zero():
        return _fail("the zero hypermatrix has no associated schemes", EXIT_ZERO)
    try:
        axis = Axis.parse(args.axis)
        point = ProjPoint.parse(args.point)
    except (ValueError, ZeroDivisionError) as exc:
        return _fail(f"--point/--axis: {exc}", EXIT_INPUT)
    try:
        diag = tensor_scheme(doc.tensor, axis).diagnose(point)
    except DimensionError as exc:
        return _fail(f"--point: {exc}", EXIT_INPUT)
    _emit(diagnosis_dict(diag, axis, point))
    return EXIT_OK


def cmd_hyperdet(args) -> int:
    doc = load_document(args.path)
    a = doc.tensor
    if a.is_zero():
        return _fail("the zero hypermatrix is excluded", EXIT_ZERO)
    order = tuple(sorted(range(3), key=lambda ax: a.shape[ax]))
    b = a.permute(order)
    p, q, r = b.shape
    if (p, q, r) == (2, 2, 2):
        value = hyperdet_222(b)
    elif p == 2 and q == r:
        value = schlafli_binary(b)
    else:
        reason = ("only formats (2,2,2) and (2,q,q) are evaluated here. "
                  "A hyperdeterminant of format p <= q <= r exists only when "
                  f"r <= p+q-1 (here p+q-1 = {p + q - 1}, r = {r})")
        if r > p + q - 1:
            reason += "; this format is outside that range, so every hypermatrix of it is degenerate"
        return _fail(f"unsupported format {a.shape}: {reason}", EXIT_UNSUPPORTED)
    print(json.dumps(str(value)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degentensor",
        description="Degeneracy, conciseness and rank of hypermatrices over the rationals",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="full report for a tensor document")
    p_an.add_argument("path")
    p_an.add_argument("--hint", action="append", default=[], metavar="AXIS:C1,C2,...",
                      help="candidate singular point on one scheme (repeatable)")
    fmt = p_an.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--text", action="store_true", help="plain text output")
    p_an.set_defaults(func=cmd_analyze)

    p_sc = sub.add_parser("scheme", help="diagnose a point on one associated scheme")
    p_sc.add_argument("path")
    p_sc.add_argument("--axis", required=True, choices=["x", "y", "z"])
    p_sc.add_argument("--point", required=True, metavar="C1,C2,...")
    p_sc.set_defaults(func=cmd_scheme)

    p_hd = sub.add_parser("hyperdet", help="hyperdeterminant of a (2,2,2) or (2,q,q) tensor")
    p_hd.add_argument("path")
    p_hd.set_defaults(func=cmd_hyperdet)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        return _fail(str(exc), EXIT_INPUT)


if __name__ == "__main__":
    raise SystemExit(main())
