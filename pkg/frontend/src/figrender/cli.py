"""Command-line entry: render <bundle_dir> <out_path> --figure 1|2|3."""

from __future__ import annotations

import argparse
import sys

from .bundle import BundleError
from .plotting import render


def _parse_size(text: str) -> tuple[float, float]:
    width, sep, height = text.partition("x")
    if not sep:
        raise argparse.ArgumentTypeError("size must look like 8x6 (inches)")
    try:
        return float(width), float(height)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="render",
        description="Render a truncation-points versus eigenvalue-curves "
                    "figure from a CSV data bundle.")
    parser.add_argument("bundle_dir", help="directory with points.csv, "
                                           "curves.csv, guide.csv")
    parser.add_argument("out_path", help="output stem or file name; both "
                                         ".svg and .png are written")
    parser.add_argument("--figure", type=int, required=True,
                        choices=(1, 2, 3))
    parser.add_argument("--size", type=_parse_size, default=(8.0, 6.0),
                        metavar="WxH", help="figure size in inches "
                                            "(default 8x6)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        svg_path, png_path = render(args.bundle_dir, args.out_path,
                                    args.figure, size=args.size)
    except (BundleError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {svg_path} and {png_path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
