"""Command line front end: ``khm-report render --summary ... --out ...``."""

import argparse
import sys

from .inputs import ReportInputError
from .render import FORMATS, ReportBundle, render


def build_parser():
    parser = argparse.ArgumentParser(
        prog="khm-report",
        description="Render figures from a betakhm sweep directory.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("render", help="write the full figure set")
    p.add_argument("--summary", required=True, help="path to summary.json")
    p.add_argument("--out", required=True, help="output directory for figures")
    p.add_argument("--format", nargs="+", default=list(FORMATS),
                   choices=list(FORMATS), help="output formats (default: both)")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        written = render(ReportBundle(summary_path=args.summary,
                                      out_dir=args.out,
                                      formats=tuple(args.format)))
    except (ReportInputError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {len(written)} figures to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
