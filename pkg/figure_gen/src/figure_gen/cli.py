"""Command-line entry point: ``figgen --in <dir> --out <dir> [--fig <id>]``.

Exit codes: 0 on success, 1 for schema mismatches (the message names the
offending column), 2 for missing input files or directories.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .render import FIGURE_IDS, build_spec, render_all, render_figure
from .schemas import SchemaError

EXIT_OK = 0
EXIT_SCHEMA = 1
EXIT_MISSING = 2


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figgen",
        description="Render static figures from mmcdrive CLI output files.")
    parser.add_argument("--in", dest="in_dir", required=True,
                        help="directory containing the run outputs "
                             "(searched one level deep)")
    parser.add_argument("--out", dest="out_dir", required=True,
                        help="directory the images are written to")
    parser.add_argument("--fig", choices=FIGURE_IDS,
                        help="render a single figure instead of all six")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.fig:
            spec = build_spec(args.fig, args.in_dir, args.out_dir)
            path = render_figure(spec)
            print(path)
            return EXIT_OK
        report = render_all(args.in_dir, args.out_dir)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISSING
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    for warning in report.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    for path in report.images:
        print(path)
    return EXIT_OK


def entrypoint() -> None:  # console-script shim
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
