"""Print per-interpretation total weights and reducts for two programs.

    python scripts/table1.py programs/F.lpmln programs/G.lpmln
"""

import argparse
from pathlib import Path

from lpmln.equivalence import check_se, reduct_of_satisfied, weight_ratio
from lpmln.semantics import classically_equivalent, interpretations, satisfied_rules
from lpmln.syntax import parse_program, render_formula
from lpmln.weights import total_weight


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("left")
    ap.add_argument("right")
    args = ap.parse_args()
    f = parse_program(Path(args.left).read_text())
    g = parse_program(Path(args.right).read_text())
    sig = f.signature | g.signature
    print(f"{'X':<10}{'TW(F_X)':<12}{'TW(G_X)':<12}{'ratio':<10}{'equiv':<7}reducts")
    for x in interpretations(sig):
        rf, rg = reduct_of_satisfied(f, x), reduct_of_satisfied(g, x)
        same = classically_equivalent(rf, rg, sig)[0]
        label = "{" + ",".join(sorted(x)) + "}"
        print(f"{label:<10}{str(total_weight(satisfied_rules(f, x))):<12}"
              f"{str(total_weight(satisfied_rules(g, x))):<12}{str(weight_ratio(f, g, x)):<10}"
              f"{'yes' if same else 'no':<7}{render_formula(rf)}  ||  {render_formula(rg)}")
    print("verdict:", check_se(f, g))


if __name__ == "__main__":
    main()
