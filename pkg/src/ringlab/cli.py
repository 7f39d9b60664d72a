"""Command line front end: ringlab <subcommand> ...

Exit codes: 0 success, 1 validation/parse/usage error, 2 refuted witness
hypothesis.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import classify as cl
from . import witnesses as wt
from .computable import abrams_ideal, finite_rank_matrix_ring, supported_direct_sum
from .constructions import (b_l, b_r, cyclic_ring, direct_sum, matrix_ring,
                            principal_ideal_subring, twisted_semigroup_ring, zero_ring)
from .core import FiniteRing, idempotents
from .errors import RingError, WitnessError
from .funring import function_ring
from .ringfile import export_ring, parse_elements, parse_ring_file

DEFAULT_BOUND = 8


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _orders(text):
    return [int(x) for x in text.replace("x", ",").split(",") if x.strip()]


FINITE = {
    "zero": lambda a: zero_ring(a.orders or [a.p]),
    "cyclic": lambda a: cyclic_ring(a.n or a.p),
    "b_l": lambda a: b_l(a.p),
    "b_r": lambda a: b_r(a.p),
    "twisted": lambda a: twisted_semigroup_ring(a.p),
    "fp-sum": lambda a: direct_sum([cyclic_ring(a.p)] * 2, f"F{a.p}xF{a.p}"),
    "b_l-sum": lambda a: direct_sum([b_l(a.p)] * 2),
    "matrix": lambda a: matrix_ring(cyclic_ring(a.p), a.n or 2),
    "ideal": lambda a: principal_ideal_subring(cyclic_ring(a.n or 4), cyclic_ring(a.n or 4).element([2])),
}

INFINITE = {
    "C": lambda a: supported_direct_sum(b_l(a.p), f"C = (+)_N B_l(F{a.p})"),
    "D": lambda a: supported_direct_sum(b_r(a.p), f"D = (+)_N B_r(F{a.p})"),
    "supported-sum": lambda a: supported_direct_sum(FINITE[a.component](a)),
    "abrams-i": lambda a: abrams_ideal(),
    "finrank": lambda a: finite_rank_matrix_ring(cyclic_ring(a.p)),
    "funring": lambda a: function_ring(),
}


def bound_from(args) -> int:
    if getattr(args, "bound", None) is not None:
        return args.bound
    env = os.environ.get("RINGLAB_BOUND")
    return int(env) if env else DEFAULT_BOUND


def load_target(args):
    """A ring file path, or a construction name."""
    path = Path(args.target)
    if path.is_file():
        return parse_ring_file(path.read_text(encoding="utf-8"))
    if args.target in FINITE:
        return FINITE[args.target](args)
    if args.target in INFINITE:
        return INFINITE[args.target](args)
    raise UsageError(f"{args.target!r} is neither a file nor a construction "
                     f"({', '.join(sorted(FINITE) + sorted(INFINITE))})")


def load_file(path) -> FiniteRing:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    return parse_ring_file(text)


def _add_params(p):
    p.add_argument("--p", type=int, default=2, help="prime field size")
    p.add_argument("--n", type=int, default=None, help="modulus / matrix size")
    p.add_argument("--orders", type=_orders, default=None, help="e.g. 2,2")
    p.add_argument("--component", default="b_l", choices=sorted(FINITE))


def build_parser():
    parser = _Parser(prog="ringlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="cmd", parser_class=_Parser)

    p = sub.add_parser("validate")
    p.add_argument("file")

    p = sub.add_parser("classify")
    p.add_argument("target")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--bound", type=int, default=None)
    _add_params(p)

    p = sub.add_parser("table")
    p.add_argument("file")
    p.add_argument("--op", choices=("add", "mul"), required=True)

    p = sub.add_parser("idempotents")
    p.add_argument("file")

    p = sub.add_parser("witness")
    p.add_argument("file")
    p.add_argument("--kind", choices=("join", "common-unit", "regular-unit", "promote"), required=True)
    p.add_argument("--elements", default="")
    p.add_argument("--side", choices=("left", "right", "both"), default=None)
    p.add_argument("--trace", action="store_true")

    p = sub.add_parser("construct")
    p.add_argument("name")
    p.add_argument("--out", default=None)
    _add_params(p)

    p = sub.add_parser("demo")
    p.add_argument("what", choices=("hierarchy",))
    p.add_argument("--bound", type=int, default=None)
    return parser


# --- subcommands ---------------------------------------------------------


def cmd_validate(args, out):
    ring = load_file(args.file)
    print(f"ok: {ring.name}, |R| = {ring.size}, additive Z{list(ring.orders)}", file=out)
    return 0


def render_classification(c: cl.Classification, render) -> str:
    size = "infinite" if c.size is None else str(c.size)
    lines = [f"ring: {c.ring_name}  (|R| = {size})"]
    for name in cl.CLASSES:
        v = c[name]
        parts = [f"{name:24s} {v.status}"]
        if v.witness is not None and not isinstance(v.witness, dict):
            w = cl._render_value(v.witness, render)
            parts.append(f"witness={w}")
        elif isinstance(v.witness, dict) and "unit" in v.witness:
            parts.append(f"unit={render(v.witness['unit'])}")
        if v.counterexample is not None:
            parts.append(f"counterexample={render(v.counterexample)}")
        if v.bound is not None:
            parts.append(f"[refuted up to N={v.bound}]")
        if v.reason:
            parts.append(f"({v.reason})")
        lines.append("  " + "  ".join(parts))
    return "\n".join(lines)


def cmd_classify(args, out):
    ring = load_target(args)
    c = cl.classify(ring, bound_from(args))
    if args.format == "json":
        json.dump(c.to_json(ring.render), out, indent=2)
        out.write("\n")
    else:
        print(render_classification(c, ring.render), file=out)
    return 0


def cmd_table(args, out):
    ring = load_file(args.file)
    elems = list(ring)
    op = ring.add if args.op == "add" else ring.mul
    labels = [ring.format(e) for e in elems]
    width = max(len(s) for s in labels + [args.op]) + 1
    print(f"{args.op:>{width}} |" + "".join(f"{s:>{width}}" for s in labels), file=out)
    print("-" * (width + 2 + width * len(elems)), file=out)
    for a, la in zip(elems, labels):
        print(f"{la:>{width}} |" + "".join(f"{ring.format(op(a, b)):>{width}}" for b in elems), file=out)
    return 0


def cmd_idempotents(args, out):
    ring = load_file(args.file)
    for e in idempotents(ring):
        print(ring.format(e), file=out)
    return 0


def cmd_witness(args, out):
    ring = load_file(args.file)
    elems = parse_elements(ring, args.elements) if args.elements else []
    trace = wt.Trace()
    fmt = ring.format
    result: dict = {"ring": ring.name, "kind": args.kind}
    if args.kind == "join":
        if len(elems) != 2:
            raise UsageError("join needs exactly two elements: e';e''")
        result.update(wt.join_analysis(ring, elems[0], elems[1]).as_dict(fmt))
    elif args.kind == "common-unit":
        side = args.side or "both"
        oracle = wt.brute_unit_oracle(ring)
        if side == "both":
            e = wt.common_two_sided_unit(ring, elems, oracle, trace)
        else:
            e = wt.common_one_sided_unit(ring, elems, side, oracle, trace)
        result.update(side=side, e=fmt(e))
    elif args.kind == "regular-unit":
        side = args.side or "left"
        if side == "both":
            raise UsageError("regular-unit works one side at a time")
        e = wt.regular_local_unit(ring, side, elems, wt.brute_quasi_inverse_oracle(ring), trace)
        result.update(side=side, e=fmt(e))
    else:
        side = args.side or "right"
        if side == "both":
            raise UsageError("promote needs the known unital side")
        result.update(side=side, e=fmt(wt.promote_to_identity(ring, side)))
    if args.trace:
        result["trace"] = trace.as_list(fmt)
        json.dump(result, out, indent=2)
        out.write("\n")
    else:
        for k, v in result.items():
            print(f"{k}: {v}", file=out)
    return 0


def cmd_construct(args, out):
    if args.name in INFINITE:
        raise UsageError(f"{args.name} is infinite and has no file format; use 'classify {args.name}'")
    if args.name not in FINITE:
        raise UsageError(f"unknown construction {args.name!r}")
    text = export_ring(FINITE[args.name](args))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return 0


def cmd_demo(args, out):
    from .demo import hierarchy_report
    text, ok = hierarchy_report(bound_from(args))
    out.write(text)
    return 0 if ok else 1


COMMANDS = {
    "validate": cmd_validate,
    "classify": cmd_classify,
    "table": cmd_table,
    "idempotents": cmd_idempotents,
    "witness": cmd_witness,
    "construct": cmd_construct,
    "demo": cmd_demo,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.cmd is None:
            raise UsageError("missing subcommand")
        return COMMANDS[args.cmd](args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 1
    except WitnessError as exc:
        print(f"hypothesis refuted: {type(exc).__name__}: {exc}", file=err)
        return 2
    except RingError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return 1


def main():
    sys.exit(run())
