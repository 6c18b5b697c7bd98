"""Every 2-colored digraph on up to N vertices (up to isomorphism) against the oracle.

    python3 scripts/exhaustive_sweep.py --max-n 4 --pattern alternating
"""
import argparse
import sys

from hkernels import experiments as ex


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--pattern", choices=sorted(ex.SWEEP_PATTERNS), action="append",
                    help="repeatable; default is all three")
    ap.add_argument("--method", choices=sorted(ex.SWEEP_GRID), action="append", help="repeatable; default is all")
    args = ap.parse_args(argv)
    patterns = {p: ex.SWEEP_PATTERNS[p] for p in args.pattern} if args.pattern else None
    grid = {m: ex.SWEEP_GRID[m] for m in args.method} if args.method else None
    out = ex.exhaustive_sweep(args.max_n, patterns, grid)
    print(out.line())
    for bad in out.data["bad"]:
        print("  ", bad)
    return 0 if out.passed else 1


if __name__ == "__main__":
    sys.exit(main())
