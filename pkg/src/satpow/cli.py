"""Command-line interface.

Subcommands operate on ideal files (show, power, colon, saturate, hilbert,
symbolic, series, fit) or on a corpus file (verify).  Exit codes: 0 success,
1 usage or parse error, 2 insufficient data for a requested fit, 3 internal
inconsistency (a proved stabilization check failed, which indicates an
engine bug rather than a data problem).
"""
from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from . import harness
from .errors import (
    InconsistencyError,
    InsufficientDataError,
    ParseError,
    RingMismatchError,
    ZeroIdealError,
)
from .filtration import symbolic_power
from .hilbert import dim_and_mult, numerator_of_quotient
from .parsing import format_ideal, format_ideal_file, load_corpus, load_ideal_file


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 1 on usage errors, not argparse's 2
        raise _UsageError(message)


def default_corpus_path() -> Path:
    """The corpus shipped inside the package."""
    return Path(str(resources.files("satpow").joinpath("data/corpus.json")))


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="satpow",
        description="Exact saturation-power engine for monomial ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_file_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="ideal file (ring/I/J format)")
        return p

    add_file_command("show", "parse an ideal file and print its canonical form")

    p = add_file_command("power", "n-th ordinary power of an ideal")
    p.add_argument("-n", type=int, required=True, help="exponent (n >= 0)")
    p.add_argument("--ideal", choices=["I", "J"], default="I")

    add_file_command("colon", "the colon ideal (I : J)")
    add_file_command("saturate", "the saturation (I : J^inf)")

    p = add_file_command("hilbert", "dimension, multiplicity, and numerator of A/ideal")
    p.add_argument("--ideal", choices=["I", "J"], default="I")

    p = add_file_command("symbolic", "the saturation power (I^n : J^inf)")
    p.add_argument("-n", type=int, required=True, help="exponent (n >= 0)")

    p = add_file_command("series", "per-n table of f(n) and quotient dimensions")
    p.add_argument("--nmax", type=int, default=12)
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p.add_argument("--out", help="write output to this path instead of stdout")

    p = add_file_command("fit", "series plus its fitted quasi-polynomial")
    p.add_argument("--nmax", type=int, default=12)
    p.add_argument("--gmax", type=int, default=6)
    p.add_argument("--min-tail", type=int, default=3)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser("verify", help="run the theorem checklist over a corpus")
    p.add_argument(
        "corpus",
        nargs="?",
        default=None,
        help="corpus JSON file (defaults to the shipped corpus)",
    )
    p.add_argument("--nmax", type=int, default=12)
    p.add_argument("--gmax", type=int, default=6)
    p.add_argument("--min-tail", type=int, default=3)
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p.add_argument("--out", help="write output to this path instead of stdout")
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "show":
        _emit(format_ideal_file(load_ideal_file(args.file)), None)
        return 0

    if args.command == "power":
        pair = load_ideal_file(args.file)
        ideal = pair.base if args.ideal == "I" else pair.saturator
        print(format_ideal(ideal.power(args.n)))
        return 0

    if args.command == "colon":
        pair = load_ideal_file(args.file)
        print(format_ideal(pair.base.colon_ideal(pair.saturator)))
        return 0

    if args.command == "saturate":
        pair = load_ideal_file(args.file)
        print(format_ideal(pair.base.saturate_ideal(pair.saturator)))
        return 0

    if args.command == "hilbert":
        pair = load_ideal_file(args.file)
        ideal = pair.base if args.ideal == "I" else pair.saturator
        numerator = numerator_of_quotient(ideal)
        module_dim, e0 = dim_and_mult(numerator, ideal.ring.var_count)
        dim_text = "empty" if module_dim is None else str(module_dim)
        print(f"dim = {dim_text}")
        print(f"e0 = {e0}")
        print(f"numerator coefficients (z^0 first): {list(numerator.coeffs)}")
        return 0

    if args.command == "symbolic":
        pair = load_ideal_file(args.file)
        print(format_ideal(symbolic_power(pair.base, pair.saturator, args.n)))
        return 0

    if args.command == "series":
        pair = load_ideal_file(args.file)
        samples = harness.run_series(pair, args.nmax)
        render = {
            "table": harness.render_series_table,
            "csv": harness.render_series_csv,
            "json": harness.render_series_json,
        }[args.format]
        _emit(render(samples), args.out)
        return 0

    if args.command == "fit":
        pair = load_ideal_file(args.file)
        samples, qp = harness.run_fit(
            pair, args.nmax, g_max=args.gmax, min_tail=args.min_tail
        )
        if args.format == "json":
            _emit(harness.render_quasipolynomial_json(qp), args.out)
        else:
            text = harness.render_series_table(samples) + "\n" + harness.render_quasipolynomial(qp)
            _emit(text, args.out)
        return 0

    if args.command == "verify":
        corpus_path = args.corpus if args.corpus else default_corpus_path()
        entries = load_corpus(corpus_path)
        records = harness.run_verify(
            entries, nmax=args.nmax, g_max=args.gmax, min_tail=args.min_tail
        )
        render = {
            "table": harness.render_verify_table,
            "csv": harness.render_verify_csv,
            "json": harness.render_verify_json,
        }[args.format]
        _emit(render(records), args.out)
        return harness.exit_code_for(records)

    raise _UsageError(f"unknown command {args.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _dispatch(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, RingMismatchError, ZeroIdealError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InsufficientDataError as exc:
        print(f"insufficient data: {exc}", file=sys.stderr)
        return 2
    except InconsistencyError as exc:
        print(f"internal inconsistency (engine bug): {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
