"""
Decomposing arithmetic progressions over the rationals
======================================================

Over Q the census is rigid: a finite arithmetic progression P admits a
decomposition A*B = P \\ {0} only when P \\ {0} is symmetric (then
A = {-1,1} works) or when P is a dilation of {-2, 1, 4} (then
A = B = h * {-1, 2}).  The sweep below checks every small case.
"""

from fractions import Fraction

from apdecomp import (classify_rational, rational_decompositions,
                      special_triple_scale)

# the doubling triple and its single class
for cls in rational_decompositions([-2, 1, 4]):
    print("{-2,1,4}:", cls.a, "*", cls.b, "tag:", cls.tag)

# scale invariance: any dilation has the same census
half = [Fraction(v, 2) for v in (-2, 1, 4)]
print("half-scale:", rational_decompositions(half)[0].tag,
      "scale =", special_triple_scale(half))

# symmetric progressions decompose; one-sided ones do not
print("\n{-3,-1,1,3} classes:", len(rational_decompositions([-3, -1, 1, 3])))
print("{2,4,6}     classes:", len(rational_decompositions([2, 4, 6])))

# tag a concrete pair against a target
print("\nclassify {1,2} * {1,3} against {1,2,3,6}:",
      classify_rational([1, 2, 3, 6], [1, 2], [1, 3]))

# small exhaustive sweep: count classes by tag
tags = {"SymmetricFactor": 0, "DoublingPair": 0, "Other": 0}
progressions = 0
for length in range(3, 6):
    for first in range(-6, 7):
        for diff in range(-6, 7):
            if diff == 0:
                continue
            values = [first + j * diff for j in range(length)]
            progressions += 1
            for cls in rational_decompositions(values):
                tags[cls.tag] += 1
print(f"\nsweep of {progressions} progressions:", tags)
assert tags["Other"] == 0
