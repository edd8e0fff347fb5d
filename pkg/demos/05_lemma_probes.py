"""
Probing the supporting additive-combinatorics bounds
====================================================

Each checker evaluates one statement on one concrete instance and
returns a verdict; the seeded suites sweep them over random and
constructed families, counting hypothesis hits and violations.
"""

from fractions import Fraction

from apdecomp import (ResidueSet, check_bourgain, check_cauchy_davenport,
                      check_freiman, check_positive_prop_ap, find_close_pair,
                      run_default_suites)

mk = ResidueSet.from_elements

# growth of the iterated difference set of a product set
v = check_bourgain(mk(11, [1, 2]), mk(11, [1, 3]))
print("bourgain:", v.conclusion_holds, v.witness)

# small doubling forces an AP: {1..6} mod 211 has |2X| = 11 < 12/5 * 6 - 3
v = check_freiman(mk(211, range(1, 7)))
print("freiman:", v.conclusion_holds, "cover =", v.witness["cover"])

# the same set fails the hypothesis at small p, so no conclusion is claimed
v = check_freiman(mk(31, range(1, 7)))
print("freiman, small p: hypothesis", v.hypothesis_satisfied,
      "conclusion", v.conclusion_holds)

# a small m-fold sumset inside a short AP pins X to a short AP too
v = check_positive_prop_ap(mk(41, [0, 1]), 3)
print("positive_prop_ap:", v.conclusion_holds, v.witness["cover"])

# the sumset lower bound, tight for intervals
v = check_cauchy_davenport(mk(5, [1, 2]), mk(5, [1, 2]))
print("cauchy_davenport:", v.conclusion_holds, v.witness)

# pigeonhole: a dense integer set in a window contains a pair at a
# controlled distance scale
pair = find_close_pair(range(133), Fraction(1, 132), k=1, span=133)
print("close pair:", pair)

# the full seeded battery
print("\nseed-1 suites:")
for name, res in run_default_suites(1).items():
    print(f"  {name}: {res.hypothesis_met}/{res.trials} hypotheses met, "
          f"{res.violations} violations")
