"""Targeted instances per constructor, every certificate re-checked by the oracle.

    python3 scripts/soundness_sweep.py --target 500 --method prop44
"""
import argparse
import sys

from hkernels import experiments as ex


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--target", type=int, default=100, help="certificates wanted per constructor")
    ap.add_argument("--max-seeds", type=int, default=5000)
    ap.add_argument("--method", choices=ex.CONSTRUCTORS, action="append", help="repeatable; default is all")
    args = ap.parse_args(argv)
    out = ex.constructor_soundness(args.target, args.max_seeds, tuple(args.method or ex.CONSTRUCTORS))
    print(out.line())
    for bad in out.data["failures"]:
        print("  ", bad)
    return 0 if out.passed else 1


if __name__ == "__main__":
    sys.exit(main())
