"""Run every acceptance criterion at full size and print one line each.

    python3 scripts/run_acceptance.py [--skip-sweep] [--json out.json]
"""
import argparse
import json
import sys

from hkernels import experiments as ex


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--skip-sweep", action="store_true", help="leave out the n <= 4 exhaustive sweep")
    ap.add_argument("--json", help="also write outcomes as JSON")
    args = ap.parse_args(argv)
    runs = [
        lambda: ex.oracle_crosscheck(500),
        lambda: ex.constructor_soundness(100),
        lambda: ex.symmetric_kernels(200),
        lambda: ex.lemma_suite(200),
        ex.tightness_fixtures,
        lambda: ex.swap_loop(200),
    ]
    if not args.skip_sweep:
        runs.append(lambda: ex.exhaustive_sweep(4))
    outcomes = []
    for i, run in enumerate(runs, 1):
        out = run()
        outcomes.append(out)
        print(f"{i}. {out.line()}", flush=True)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([{"name": o.name, "passed": o.passed, "seconds": round(o.seconds, 2), "summary": o.summary, "data": o.data}
                       for o in outcomes], fh, indent=2, default=str)
    return 0 if all(o.passed for o in outcomes) else 1


if __name__ == "__main__":
    sys.exit(main())
