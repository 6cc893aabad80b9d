"""Time transitive closure and the quotient order on random relations.

    python scripts/bench_closure.py --sizes 250 500 1000 2000 --density 0.01
"""
import argparse
import time

from relorder.quotient import quotient_relation
from relorder.relation import transitive_closure
from relorder.rng import SplitMix64, random_relation


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[250, 500, 1000, 2000])
    ap.add_argument("--density", type=float, default=0.01)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"{'n':>6} {'pairs':>9} {'classes':>8} {'closure s':>10} {'quotient s':>11}")
    for n in args.sizes:
        r = random_relation(n, args.density, SplitMix64(args.seed))
        t0 = time.perf_counter()
        closure = transitive_closure(r)
        t1 = time.perf_counter()
        q = quotient_relation(r, closure)
        t2 = time.perf_counter()
        print(f"{n:>6} {len(r):>9} {len(q.partition):>8} {t1 - t0:>10.3f} {t2 - t1:>11.3f}")


if __name__ == "__main__":
    main()
