"""Command-line wrapper: motzkinfig --in sweep.csv --kind entropy-vs-n --out fig.svg"""

from __future__ import annotations

import argparse
import sys

from motzkinfig.figures import KINDS, FigureSpec, render


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="motzkinfig", description=__doc__)
    parser.add_argument("--in", dest="in_path", required=True, help="input CSV")
    parser.add_argument("--kind", required=True, choices=KINDS)
    parser.add_argument("--out", required=True, help="output SVG path")
    try:
        args = parser.parse_args(argv)
    except SystemExit:
        return 1
    try:
        render(FigureSpec(args.in_path, args.kind, args.out))
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
