"""Trials the random falsifier needs to separate the non-equivalent example pairs.

    python scripts/falsifier_budget.py --seeds 20 --trials 1000
"""

import argparse
import statistics
from pathlib import Path

from lpmln.equivalence import falsify
from lpmln.syntax import parse_program

PROGRAMS = Path(__file__).resolve().parent.parent / "programs"
PAIRS = [("Fprime", "G"), ("F", "Gprime"), ("P1", "P2")]


def load(name):
    return parse_program((PROGRAMS / f"{name}.lpmln").read_text())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=20)
    ap.add_argument("--trials", type=int, default=1000)
    args = ap.parse_args()
    for left, right in PAIRS:
        f, g = load(left), load(right)
        used = []
        for seed in range(args.seeds):
            r = falsify(f, g, trials=args.trials, seed=seed)
            if r.found:
                used.append(r.trials_used)
        found = len(used)
        med = statistics.median(used) if used else float("nan")
        print(f"{left:>7} vs {right:<7} found {found}/{args.seeds}  "
              f"median trials {med}  max {max(used, default=0)}")


if __name__ == "__main__":
    main()
