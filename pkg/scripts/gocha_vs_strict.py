"""How often do the two Schwartz variants, and the maximal-plus-strong-cycles
union, disagree?  Exhaustive over every relation on n <= 3 elements, sampled
above that.

    python scripts/gocha_vs_strict.py --nmax 5 --count 5000
"""
import argparse
from collections import Counter

from relorder.formats import serialize
from relorder.solutions import deb_decompose, maximal_elements, schwartz, strong_top_cycles
from relorder.sweep import instances


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=4)
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--show", type=int, default=1, help="print this many smallest examples per kind")
    args = ap.parse_args()

    total = Counter()
    differ = Counter()
    union_differ = Counter()
    literal_deb = Counter()
    shown = Counter()
    for r in instances(args.nmax, args.count, args.seed):
        total[r.n] += 1
        gocha = schwartz(r, "gocha")
        union = maximal_elements(r).union(*(c.members for c in strong_top_cycles(r)))
        if gocha != schwartz(r, "strict"):
            differ[r.n] += 1
        if gocha != union:
            union_differ[r.n] += 1
            if shown["union"] < args.show:
                shown["union"] += 1
                print(f"gocha {sorted(gocha)} vs maximal+strong {sorted(union)}:\n{serialize(r)}")
        if deb_decompose(r).literal_violations:
            literal_deb[r.n] += 1

    print(f"{'n':>3} {'instances':>10} {'gocha!=strict':>14} {'gocha!=union':>13} {'literal deb fails':>18}")
    for n in sorted(total):
        print(f"{n:>3} {total[n]:>10} {differ[n]:>14} {union_differ[n]:>13} {literal_deb[n]:>18}")


if __name__ == "__main__":
    main()
