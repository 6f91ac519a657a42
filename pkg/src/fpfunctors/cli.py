"""Command-line front end.

Exit codes: 0 success, 2 malformed input, 3 unsupported ring tag,
4 precondition violation (for instance a non-closed set passed to ``member``).
"""

from __future__ import annotations

import argparse
import os
import sys

from .arith import check_prime
from .errors import MalformedInputError, PreconditionError, UnsupportedRingError
from .functors import evaluate
from .invariants import hilbert_data
from .serialization import (
    Report,
    closed_set_from_json,
    closed_set_to_json,
    dumps,
    functor_from_json,
    invariants_to_json,
    load_json_file,
    module_from_json,
    parse_module,
)
from .ziegler import is_closed, serre_member, vanishing_locus

EXIT_OK = 0
EXIT_MALFORMED = 2
EXIT_RING = 3
EXIT_PRECONDITION = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_MALFORMED, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    parser = _Parser(
        prog="fpfunctors",
        description="Invariants and vanishing loci of finitely presented functors over Z.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", parents=[fmt], help="full invariants report")
    p.add_argument("functor")

    p = sub.add_parser("hilbert", parents=[fmt], help="Hilbert function at a prime")
    p.add_argument("functor")
    p.add_argument("--prime", required=True, type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--n-max", type=int, default=None)
    group.add_argument("--polynomial", action="store_true")

    p = sub.add_parser("eval", parents=[fmt], help="evaluate at a module")
    p.add_argument("functor")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--at", help='module in the mini-DSL, e.g. "Z/8+Z/2+Z"')
    group.add_argument("--at-module", help="module JSON file")

    p = sub.add_parser("vlocus", parents=[fmt], help="vanishing locus")
    p.add_argument("functor")

    p = sub.add_parser("member", parents=[fmt], help="Serre subcategory membership")
    p.add_argument("functor")
    p.add_argument("--set", required=True, dest="closed_set")

    p = sub.add_parser("is-closed", parents=[fmt], help="closedness of a point set")
    p.add_argument("--set", required=True, dest="closed_set")
    return parser


def _functor(path):
    return functor_from_json(load_json_file(path))


def _closed_set(path):
    return closed_set_from_json(load_json_file(path))


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _cmd_invariants(args):
    report = Report.build(_functor(args.functor), os.path.basename(args.functor))
    return report.to_json(), report.to_text()


def _cmd_hilbert(args):
    G = _functor(args.functor)
    try:
        p = check_prime(args.prime)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from exc
    hilb = hilbert_data(G)
    if args.polynomial:
        slope, const, m = hilb.polynomial(p)
        data = {
            "prime": str(p),
            "slope": str(slope),
            "constant": str(const),
            "threshold": str(m),
        }
        return data, f"{slope}*n + {const} for n >= {m}\n"
    n_max = args.n_max if args.n_max is not None else max(hilb.threshold(p) + 1, 5)
    if n_max < 1:
        raise PreconditionError("--n-max must be positive")
    values = [hilb(p, n) for n in range(1, n_max + 1)]
    data = {"prime": str(p), "values": [str(v) for v in values]}
    return data, ", ".join(str(v) for v in values) + "\n"


def _cmd_eval(args):
    G = _functor(args.functor)
    X = parse_module(args.at) if args.at is not None else module_from_json(
        load_json_file(args.at_module)
    )
    inv = evaluate(G, X).invariants
    return {"display": str(inv), "structure": invariants_to_json(inv)}, f"{inv}\n"


def _cmd_vlocus(args):
    V = vanishing_locus(_functor(args.functor))
    return closed_set_to_json(V), V.describe() + "\n"


def _cmd_member(args):
    G = _functor(args.functor)
    X = _closed_set(args.closed_set)
    answer = serre_member(G, X)
    return {"member": answer}, _bool(answer) + "\n"


def _cmd_is_closed(args):
    answer = is_closed(_closed_set(args.closed_set))
    return {"closed": answer}, _bool(answer) + "\n"


COMMANDS = {
    "invariants": _cmd_invariants,
    "hilbert": _cmd_hilbert,
    "eval": _cmd_eval,
    "vlocus": _cmd_vlocus,
    "member": _cmd_member,
    "is-closed": _cmd_is_closed,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    """Run one command line; return the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_MALFORMED
    try:
        data, text = COMMANDS[args.command](args)
    except UnsupportedRingError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_RING
    except MalformedInputError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_MALFORMED
    except PreconditionError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PRECONDITION
    stdout.write(dumps(data) if args.format == "json" else text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
