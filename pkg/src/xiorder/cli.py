"""Command-line front end.

Exit status: 0 on success, 1 when a verification or cross-check fails,
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys

from . import oracle, rewrite, tables
from .core import Word
from .parser import ParseError, parse_word
from .render import FORMATS, nf_to_text, render_nf, render_triangle

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="xiorder", description="Normal ordering in the algebra of x and I = integral from 0 to x.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    o = sub.add_parser("order", help="normal-order a word")
    o.add_argument("expr")
    o.add_argument("--format", choices=FORMATS, default="text")
    o.add_argument("--method", choices=("rewrite", "closed-form", "both"), default="rewrite")

    pw = sub.add_parser("power", help="normal form of (x^L I^D)^N")
    pw.add_argument("--lambda", dest="lam", type=_positive, required=True)
    pw.add_argument("--delta", type=_positive, required=True)
    pw.add_argument("-n", type=_positive, required=True)
    pw.add_argument("--format", choices=FORMATS, default="text")

    b = sub.add_parser("bessel", help="rows 0..N of the Bessel triangle")
    b.add_argument("-n", type=_nonnegative, required=True)
    b.add_argument("--format", choices=FORMATS, default="text")

    t = sub.add_parser("table", help="rows 1..N of the (L, D) coefficient triangle")
    t.add_argument("--lambda", dest="lam", type=_positive, required=True)
    t.add_argument("--delta", type=_positive, required=True)
    t.add_argument("-n", type=_positive, required=True)
    t.add_argument("--format", choices=FORMATS, default="text")

    v = sub.add_parser("verify", help="check a word's normal form on monomials x^m")
    v.add_argument("expr")
    v.add_argument("--samples", type=_positive, default=None)
    return p


def _cmd_order(args, out, err) -> int:
    w = parse_word(args.expr)
    if args.method == "closed-form":
        nf = tables.word_closed_form(w)
    else:
        nf = rewrite.normal_order(w)
        if args.method == "both":
            other = tables.word_closed_form(w)
            if other != nf:
                err.write(f"mismatch for {w}:\n  rewrite:     {nf_to_text(nf)}\n  closed-form: {nf_to_text(other)}\n")
                return EXIT_MISMATCH
    out.write(render_nf(nf, w, args.format))
    return EXIT_OK


def _cmd_power(args, out, err) -> int:
    w = Word.of(("x", args.lam), ("I", args.delta)) ** args.n
    nf = tables.general_power_normal_form(args.lam, args.delta, args.n)
    out.write(render_nf(nf, w, args.format))
    return EXIT_OK


def _cmd_bessel(args, out, err) -> int:
    rows = tables.bessel_triangle(args.n)
    out.write(render_triangle(rows, args.format, {"triangle": "bessel"}))
    return EXIT_OK


def _cmd_table(args, out, err) -> int:
    tri = tables.generalized_triangle(args.lam, args.delta, args.n)
    meta = {"triangle": "generalized", "lambda": args.lam, "delta": args.delta}
    out.write(render_triangle(tri.rows, args.format, meta))
    return EXIT_OK


def _cmd_verify(args, out, err) -> int:
    w = parse_word(args.expr)
    nf = rewrite.normal_order(w)
    report = oracle.verify_equivalence(w, nf, args.samples)
    out.write(f"word: {w}\n")
    out.write(f"normal form: {nf_to_text(nf)}\n")
    out.write(f"equal: {'true' if report.equal else 'false'}\n")
    for m, lhs, rhs in report.samples:
        flag = "ok" if lhs == rhs else "MISMATCH"
        out.write(f"m={m}: word={lhs} normal_form={rhs} {flag}\n")
    if not report.equal:
        err.write(f"verification failed: first mismatch at m={report.first_mismatch}\n")
        return EXIT_MISMATCH
    return EXIT_OK


_COMMANDS = {
    "order": _cmd_order,
    "power": _cmd_power,
    "bessel": _cmd_bessel,
    "table": _cmd_table,
    "verify": _cmd_verify,
}


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        err.write(f"{e}\n")
        return EXIT_USAGE
    except SystemExit as e:  # --help
        return int(e.code or 0)
    try:
        return _COMMANDS[args.command](args, out, err)
    except ParseError as e:
        err.write(f"parse error: {e.message} at offset {e.offset}\n")
        if e.text:
            err.write(f"  {e.text}\n  {' ' * e.offset}^\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
