"""
Which intervals mod p factor as a product set?
==============================================

A multiplicative decomposition of S is a pair of sets A, B with at least
two elements each and A*B = S \\ {0}.  The search enumerates every class
of pairs up to dilation (A, B) -> (cA, B/c) and swap, then tags each
class by its shape.
"""

from apdecomp import (IntervalSpec, ResidueSet, analyze_set,
                      find_decompositions, make_interval)

# the one asymmetric length-3 family: {4,5,6} mod 7 equals 5 * {-2,1,4}
triple = make_interval(IntervalSpec(p=7, n=3, N=3))
report = analyze_set(triple)
print("S =", triple.elements(), "special_triple:", report.special_triple)
for cls in report.classes:
    print("  class", cls.representative.a.elements(), "*",
          cls.representative.b.elements(), "tag:", cls.tag,
          "orbit size:", cls.orbit_size)

# symmetric sets always decompose: {-1,1} times the set itself
sym = ResidueSet.from_elements(11, [-2, -1, 1, 2])
classes = find_decompositions(sym)
print("\nS =", sym.elements(), "classes:", len(classes))
print("  tags:", sorted(c.tag for c in classes))

# most short intervals do not decompose at all
for n in range(13):
    s = make_interval(IntervalSpec(p=13, n=n, N=4))
    k = len(find_decompositions(s))
    if k:
        print(f"\np=13 interval starting after {n}: {s.elements()} has {k} classes")

# a census over one prime: how many intervals of each length decompose
print("\np=13 census (length: decomposable / total)")
for length in range(3, 7):
    hits = 0
    for n in range(13):
        if find_decompositions(make_interval(IntervalSpec(13, n, length))):
            hits += 1
    print(f"  N={length}: {hits:2d} / 13")
