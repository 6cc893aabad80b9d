"""Oracle sweep with a per-check tally.

    python scripts/run_sweep.py --nmax 7 --count 10000 --seed 20240611
"""
import argparse
import logging

from relorder.sweep import CHECKS, run_sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=7)
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--checks", nargs="*", default=list(CHECKS), choices=CHECKS)
    args = ap.parse_args()
    logging.basicConfig(level=logging.WARNING)

    result = run_sweep(args.nmax, args.count, args.seed, set(args.checks))
    for n in sorted(result.per_size):
        print(f"n={n:<3d} {result.per_size[n]:>7d} instances")
    print()
    for check in args.checks:
        failed = len(result.failed(check))
        print(f"{check:<22s} checked {result.checked[check]:>7d}  violations {failed}")
    print()
    print(result.summary())


if __name__ == "__main__":
    main()
