"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from . import claims
from .circuit import Circuit, simulate_classical, simulate_quantum
from .embedding import embed
from .enumeration import (
    ExtensionQuery,
    base_table,
    enumerate_balanced_f1,
    enumerate_extensions,
    enumerate_extensions_23,
    filter_symmetric,
    find_law_counterexamples,
    relabeled_subtraction_extensions,
)
from .gates import GATE_NAMES, gate
from .linalg import StateVector
from .logic import cyclic_and, cyclic_or
from .permutation import order
from .radix import index_to_digits
from .table import FormatError, TruthTable


class UsageError(Exception):
    pass


def fmt_real(x: float) -> str:
    if abs(x - round(x)) <= 1e-12:
        return str(int(round(x)))
    return f"{x:.6g}"


def fmt_complex(z: complex) -> str:
    re, im = fmt_real(z.real), fmt_real(z.imag)
    if im.startswith("-"):
        return f"{re}{im}i"
    return f"{re}+{im}i"


def _words(word) -> str:
    return " ".join(map(str, word))


def _gate(name: str):
    try:
        return gate(name)
    except KeyError:
        raise UsageError(f"unknown gate {name!r}; known: {' '.join(GATE_NAMES)}") from None


def cmd_table(args, out) -> int:
    g = _gate(args.gate)
    if not g.is_classical:
        raise UsageError(f"{g.name} has no truth table")
    table = g.table()
    for word, image in zip(g.shape.words(), table.entries):
        print(f"{_words(word)} -> {_words(image)}", file=out)
    return 0


def cmd_matrix(args, out) -> int:
    g = _gate(args.gate)
    for row in g.matrix:
        print(" ".join(fmt_complex(complex(z)) for z in row), file=out)
    return 0


def cmd_order(args, out) -> int:
    g = _gate(args.gate)
    print(order(g.permutation), file=out)
    return 0


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _parse_amplitude(text: str) -> complex:
    try:
        return complex(text.replace("i", "j"))
    except ValueError:
        raise UsageError(f"bad amplitude {text!r}") from None


def cmd_run(args, out) -> int:
    c = Circuit.from_text(_read(args.circuit))
    if args.amplitudes is not None:
        amps = np.array([_parse_amplitude(a) for a in args.amplitudes], dtype=complex)
        if amps.size != c.shape.dimension:
            raise UsageError(f"circuit needs {c.shape.dimension} amplitudes, got {amps.size}")
        norm = np.linalg.norm(amps)
        if norm == 0:
            raise UsageError("zero state vector")
        result = simulate_quantum(c, StateVector(c.shape, amps / norm))
        print(" ".join(fmt_complex(complex(z)) for z in result.amplitudes), file=out)
        return 0
    try:
        word = tuple(int(d) for d in args.digits)
    except ValueError:
        raise UsageError(f"bad digit list {args.digits}") from None
    if len(word) != len(c.shape):
        raise UsageError(f"circuit has {len(c.shape)} wires, got {len(word)} digits")
    if not c.is_classical:
        raise UsageError("circuit has non-classical gates; pass --amplitudes")
    try:
        print(_words(simulate_classical(c, word)), file=out)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return 0


def cmd_embed(args, out) -> int:
    f = TruthTable.from_text(_read(args.table))
    g, report = embed(f)
    combined = f.input_shape + f.output_shape
    for i, word in enumerate(combined.words()):
        print(f"{_words(word)} -> {_words(index_to_digits(combined, g(i)))}", file=out)
    print(report, file=out)
    return 0


def _fmt_table(t: TruthTable) -> str:
    n = t.input_shape[1]
    vals = t.values()
    return " | ".join(_words(vals[i:i + n]) for i in range(0, len(vals), n))


def cmd_enumerate(args, out) -> int:
    base = base_table(args.base)
    if args.mode == "extensions":
        if args.ambient == "2,3":
            found = enumerate_extensions_23(base)
            relabeled = relabeled_subtraction_extensions(base)
            for p in found:
                print(_words(p.mapping), file=out)
            print(f"relabeled-subtraction={len(relabeled)}", file=out)
        else:
            found = enumerate_extensions(ExtensionQuery(base), full_scan=args.full_scan)
            for p in found:
                print(_words(p.mapping), file=out)
        count = len(found)
    elif args.mode in ("balanced", "symmetric"):
        tables = enumerate_balanced_f1(base)
        if args.mode == "symmetric":
            tables = filter_symmetric(tables)
        for t in tables:
            print(_fmt_table(t), file=out)
        count = len(tables)
    else:
        op = cyclic_and if args.base.upper() == "AND" else cyclic_or
        triples = find_law_counterexamples(op, args.law)
        for t in triples:
            print(_words(t), file=out)
        count = len(triples)
    print(f"count={count}", file=out)
    return 0


def cmd_verify(args, out) -> int:
    names = list(claims.CLAIMS) if args.claim == "all" else [args.claim]
    if args.claim != "all" and args.claim not in claims.CLAIMS:
        raise UsageError(f"unknown claim {args.claim!r}; known: {' '.join(claims.CLAIMS)}")
    failed = 0
    for name in names:
        ok, line = claims.report_line(name)
        failed += not ok
        print(line, file=out)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mixrev", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (
        ("table", cmd_table, "print a gate's truth table"),
        ("matrix", cmd_matrix, "print a gate's matrix"),
        ("order", cmd_order, "print a gate's period"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("gate")
        p.set_defaults(func=fn)

    p = sub.add_parser("run", help="simulate a circuit file")
    p.add_argument("circuit")
    p.add_argument("digits", nargs="*", help="classical input digits")
    p.add_argument("--amplitudes", nargs="+", metavar="A",
                   help="input state amplitudes (normalized before use)")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("embed", help="embed a truth-table file reversibly")
    p.add_argument("table")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("enumerate", help="run an exhaustive search")
    p.add_argument("mode", choices=["extensions", "balanced", "symmetric", "counterexamples"])
    p.add_argument("base", type=str.upper, choices=["AND", "OR"])
    p.add_argument("--ambient", choices=["3,3", "2,3"], default="3,3")
    p.add_argument("--full-scan", action="store_true",
                   help="filter all 9! permutations instead of the structured search")
    p.add_argument("--law", choices=["associativity", "distributivity"], default="associativity")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check named claims")
    p.add_argument("claim", help="claim id or 'all'")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, FormatError) as exc:
        print(f"mixrev: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
