"""Command-line entry point: ``gex <command> [--g ...] [options]``."""

from __future__ import annotations

import argparse
import re
import sys

from .errors import GexError
from .report import COMMANDS, DEFAULT_ALL_RANGE, FORMATS, RunConfig, emit_report, run

_RANGE = re.compile(r"^\s*(\d+)\s*\.\.\s*(\d+)\s*$")


def parse_g(text: str):
    """Parse ``5``, ``10,50,250`` or ``2..10`` (inclusive; empty when reversed)."""
    m = _RANGE.match(text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        gs = tuple(range(lo, hi + 1))
    else:
        try:
            gs = tuple(int(part) for part in text.split(",") if part.strip())
        except ValueError:
            raise argparse.ArgumentTypeError(f"cannot parse g specification {text!r}") from None
        if not gs:
            raise argparse.ArgumentTypeError("empty g list")
    bad = [g for g in gs if g < 2]
    if bad:
        raise argparse.ArgumentTypeError(f"g must be >= 2, got {bad[0]}")
    return gs


def _tol(text):
    x = float(text)
    if not 0 < x < 1:
        raise argparse.ArgumentTypeError("tolerance must lie in (0, 1)")
    return x


def _positive_int(text):
    x = int(text)
    if x < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return x


def _positive_float(text):
    x = float(text)
    if not x > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return x


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gex", description="Reproduce the computational claims about the manifolds M_g.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--g", type=parse_g, default=None,
                        help="single value, comma list, or inclusive range a..b (default 2, or 2..20 for 'all')")
    parser.add_argument("--tol", type=_tol, default=1e-8, help="quadrature tolerance per tetrahedron")
    parser.add_argument("--bound", type=_positive_int, default=100, help="slope coefficient bound")
    parser.add_argument("--k", type=_positive_float, default=1.0, help="tilt scale k")
    parser.add_argument("--format", choices=FORMATS, default="text", dest="fmt")
    parser.add_argument("--output", default=None, help="write the report here instead of stdout")
    parser.add_argument("--deep", action="store_true",
                        help="with 'all', also run the volume checks at g = 10, 50, 250, 500")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    gs = args.g if args.g is not None else (DEFAULT_ALL_RANGE if args.command == "all" else (2,))
    cfg = RunConfig(command=args.command, gs=gs, quadrature_tol=args.tol, coeff_bound=args.bound,
                    k=args.k, output=args.output, fmt=args.fmt, deep=args.deep)
    try:
        rep = run(cfg)
    except GexError as exc:
        print(f"gex: {exc}", file=sys.stderr)
        return 1
    data = emit_report(rep, cfg.fmt)
    if cfg.output:
        try:
            with open(cfg.output, "wb") as fh:
                fh.write(data)
        except OSError as exc:
            print(f"gex: cannot write report to {cfg.output}: {exc.strerror}", file=sys.stderr)
            return 1
    else:
        try:
            sys.stdout.buffer.write(data)
            sys.stdout.flush()
        except BrokenPipeError:
            # reader went away (e.g. piped into head); keep the exit status meaningful
            sys.stderr.close()
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
