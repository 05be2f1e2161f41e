"""Batch command line: compute universal polynomials, compose and apply
operations, loop them, take coproducts, and run the verification suites.

Identical invocations (including --seed) produce byte-identical output; the
exit code is nonzero exactly when a suite fails or an operand errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import run_suite
from .errors import LambdaOpsError
from .evenops import compose_even, op_coadd, op_comult
from .kbu import coadd, comult
from .loopgrade import compose_odd, loop_even, loop_odd
from .models import get_model
from .parser import ParseError, parse_element, parse_operand
from .symfun import left_linearise, newton_psi, universal_pij, universal_pk


def _emit(payload: dict, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print(text)


def cmd_upoly(args) -> int:
    kind = args.kind
    idx = args.indices
    need = 2 if kind == "pij" else 1
    if len(idx) != need:
        print(f"upoly {kind} expects {need} index argument(s)", file=sys.stderr)
        return 1
    if kind == "pk":
        poly = universal_pk(idx[0])
    elif kind == "pij":
        poly = universal_pij(idx[0], idx[1])
    elif kind == "plin":
        poly = left_linearise(universal_pk(idx[0]))
    else:
        poly = newton_psi(idx[0])
    payload = {
        "command": "upoly",
        "kind": kind,
        "indices": idx,
        "result": poly.to_obj(),
    }
    _emit(payload, args.format, str(poly))
    return 0


def _split_compose_operands(args) -> tuple[str, str]:
    if args.rhs is not None:
        return args.lhs, args.rhs
    for sep in ("∘", " o "):
        if sep in args.lhs:
            left, right = args.lhs.split(sep, 1)
            return left, right
    raise ParseError("compose needs two operands (or one containing a composition sign)")


def cmd_compose(args) -> int:
    lhs_text, rhs_text = _split_compose_operands(args)
    lhs = parse_operand(lhs_text, args.trunc, args.window)
    rhs = parse_operand(rhs_text, args.trunc, args.window)
    if lhs.kind == "odd" or rhs.kind == "odd":
        if lhs.kind != "odd" or rhs.kind != "odd":
            print("parity mismatch: cannot compose even with odd", file=sys.stderr)
            return 1
        result = compose_odd(lhs.payload, rhs.payload)
        payload = {
            "command": "compose",
            "parity": "odd",
            "trunc": args.trunc,
            "result": result.to_obj(),
        }
        _emit(payload, args.format, str(result))
        return 0
    parser_ctx = _operand_ctx(args)
    r = parser_ctx.promote_even(lhs).payload
    s = parser_ctx.promote_even(rhs).payload
    result = compose_even(r, s)
    payload = {
        "command": "compose",
        "parity": "even",
        "trunc": args.trunc,
        "window": args.window,
        "result": result.to_obj(),
    }
    _emit(payload, args.format, str(result))
    return 0


def _operand_ctx(args):
    from .parser import OperandParser

    return OperandParser([], args.trunc, args.window)


def cmd_act(args) -> int:
    from .evenops import act

    op_val = parse_operand(args.op, args.trunc, args.window)
    if op_val.kind == "odd":
        print("act applies even operations; odd classes act through suspension",
              file=sys.stderr)
        return 1
    op = _operand_ctx(args).promote_even(op_val).payload
    model = get_model(args.model)
    elem_val = parse_element(args.element, args.trunc, args.window)
    if elem_val.kind == "int":
        elem = model.from_int(elem_val.payload)
    elif elem_val.kind == "poly":
        elem = elem_val.payload
    else:
        print(f"cannot read a model element from a {elem_val.kind} expression",
              file=sys.stderr)
        return 1
    result = act(op, model, elem)
    shown = model.show(result)
    payload = {
        "command": "act",
        "model": args.model,
        "element": args.element,
        "result": shown,
    }
    _emit(payload, args.format, shown)
    return 0


def cmd_loop(args) -> int:
    val = parse_operand(args.op, args.trunc, args.window)
    if val.kind == "odd":
        result = loop_odd(val.payload, args.window)
        payload = {"command": "loop", "parity": "odd->even",
                   "result": result.to_obj()}
        _emit(payload, args.format, str(result))
        return 0
    op = _operand_ctx(args).promote_even(val).payload
    result = loop_even(op)
    payload = {"command": "loop", "parity": "even->odd", "result": result.to_obj()}
    _emit(payload, args.format, str(result))
    return 0


def cmd_coprod(args) -> int:
    val = parse_operand(args.op, args.trunc, args.window)
    if val.kind == "kbu":
        tensor = coadd(val.payload) if args.kind == "add" else comult(val.payload)
        pairs = [[left.poly.to_obj(), right.poly.to_obj()]
                 for left, right in tensor.pairs()]
        payload = {"command": "coprod", "kind": args.kind, "carrier": "ring",
                   "trunc": args.trunc, "result": pairs}
        _emit(payload, args.format, str(tensor))
        return 0
    op = _operand_ctx(args).promote_even(val).payload
    tensor = op_coadd(op) if args.kind == "add" else op_comult(op)
    entries = [[i, j, poly.to_obj()] for (i, j), poly in sorted(tensor.entries.items())]
    text = "; ".join(f"({i},{j}): {poly}" for i, j, poly in
                     ((i, j, tensor.entries[(i, j)]) for (i, j) in sorted(tensor.entries)))
    payload = {"command": "coprod", "kind": args.kind, "carrier": "operation",
               "trunc": args.trunc, "window": args.window, "result": entries}
    _emit(payload, args.format, text if text else "0")
    return 0


def cmd_check(args) -> int:
    report = run_suite(args.suite, args.trunc, args.window, args.seed)
    if args.format == "json":
        print(json.dumps(report, sort_keys=True, separators=(",", ":")))
    else:
        _print_report(report)
    return 0 if report["pass"] else 1


def _print_report(report: dict) -> None:
    if "suites" in report:
        for sub in report["suites"]:
            _print_report(sub)
        print(f"ALL: {'PASS' if report['pass'] else 'FAIL'}")
        return
    for prop in report["properties"]:
        status = "PASS" if prop["pass"] else "FAIL"
        line = f"{report['suite']}/{prop['id']}: {status} ({prop['instances']} instances)"
        if prop["counterexample"]:
            line += f" first counterexample: {prop['counterexample']}"
        print(line)
    print(f"{report['suite']}: {'PASS' if report['pass'] else 'FAIL'}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--trunc", type=int, default=argparse.SUPPRESS,
                        help="generator truncation level N (default 5)")
    common.add_argument("--window", type=int, default=argparse.SUPPRESS,
                        help="integer window half-width W (default 16)")
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--model", default=argparse.SUPPRESS,
                        help="model selector (zz, sphere, cp:m, split:m, coi)")

    ap = argparse.ArgumentParser(
        prog="lambdaops",
        description="Exact computations in the lambda-operation plethory",
        parents=[common],
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("upoly", parents=[common], help="print a universal polynomial")
    p.add_argument("kind", choices=("pk", "pij", "plin", "psi"))
    p.add_argument("indices", type=int, nargs="+")
    p.set_defaults(fn=cmd_upoly)

    p = sub.add_parser("compose", parents=[common],
                       help="compose two operations of equal parity")
    p.add_argument("lhs")
    p.add_argument("rhs", nargs="?", default=None)
    p.set_defaults(fn=cmd_compose)

    p = sub.add_parser("act", parents=[common],
                       help="apply an even operation to a model element")
    p.add_argument("op")
    p.add_argument("element")
    p.set_defaults(fn=cmd_act)

    p = sub.add_parser("loop", parents=[common],
                       help="loop an operation (swaps parity)")
    p.add_argument("op")
    p.set_defaults(fn=cmd_loop)

    p = sub.add_parser("coprod", parents=[common],
                       help="co-addition or co-multiplication")
    p.add_argument("kind", choices=("add", "mul"))
    p.add_argument("op")
    p.set_defaults(fn=cmd_coprod)

    p = sub.add_parser("check", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=("all", "biring", "compose", "looping", "models", "main"))
    p.set_defaults(fn=cmd_check)

    return ap


DEFAULTS = {"trunc": 5, "window": 16, "format": "text", "seed": 0, "model": "zz"}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for key, value in DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    try:
        return args.fn(args)
    except (ParseError, LambdaOpsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
