"""Cross-check the six characterizations on seeded random program pairs.

    python scripts/condition_sweep.py --pairs 2000 --seed 1 --atoms 3
"""

import argparse
import collections
import random
import time

from lpmln.equivalence import check_all_conditions, check_se
from lpmln.generators import random_pair
from lpmln.syntax import render_program


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--atoms", type=int, default=3)
    ap.add_argument("--rules", type=int, default=4)
    ap.add_argument("--depth", type=int, default=3)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    names = [chr(ord("a") + i) for i in range(args.atoms)]
    outcomes = collections.Counter()
    disagreements = 0
    start = time.perf_counter()
    for _ in range(args.pairs):
        f, g = random_pair(rng, names, max_rules=args.rules, max_depth=args.depth)
        cc = check_all_conditions(f, g)
        verdict = type(check_se(f, g)).__name__
        outcomes[(cc.holds if cc.agree else "disagree", verdict)] += 1
        if not cc.agree:
            disagreements += 1
            print("DISAGREE", {c.value: r.holds for c, r in cc.results.items()})
            print(render_program(f), "---", render_program(g), sep="\n")
    elapsed = time.perf_counter() - start
    for (conds, verdict), n in sorted(outcomes.items(), key=str):
        print(f"conditions={conds!s:<9} check_se={verdict:<15} {n}")
    print(f"{args.pairs} pairs, {disagreements} disagreements, {elapsed:.1f}s")


if __name__ == "__main__":
    main()
