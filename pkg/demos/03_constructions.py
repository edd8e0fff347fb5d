"""
Explicit decompositions of long intervals
=========================================

Three constructive families, each re-verified by direct multiplication
before being returned.
"""

from apdecomp import (ResidueSet, special_triple, sqrt_minus_one,
                      sum_two_squares, symmetric_decomposition,
                      theorem2_decomposition, theorem3_decomposition)

# every prime p = 1 mod 4 splits as u^2 + v^2, giving h = u/v with h^2 = -1
for p in (13, 29, 101):
    t = sum_two_squares(p)
    h = sqrt_minus_one(p)
    print(f"p={p}: {t.u}^2 + {t.v}^2, sqrt(-1) = {h}")

# {1,...,L} = A * {1,h} whenever (p-1)/2 <= L <= p-1; A keeps at least
# half the interval because x and h*x cannot both leave it
res = theorem2_decomposition(13, 6)
print("\n{1..6} mod 13 =", res.a.elements(), "*", res.b.elements())
for p in (13, 17, 29):
    for L in ((p - 1) // 2, p - 1):
        r = theorem2_decomposition(p, L)
        print(f"  p={p} L={L}: |A| = {len(r.a)} (>= {-(-L // 2)})")

# a two-sided interval {-k..k} needs only B = {1,2} once k >= 0.4(p-1)
res = theorem3_decomposition(11, 4, 4)
print("\n{-4..4} mod 11 =", res.a.elements(), "*", res.b.elements())

# the short exceptional family: +-{t-1, t, t+1} at t = 1/3 factors for
# every prime p >= 5 even though the interval is not symmetric
for p in (5, 7, 11, 31):
    r = special_triple(p)
    print(f"p={p}: {r.interval.elements()} = "
          f"{r.a.elements()} * {r.b.elements()}")

# any symmetric set decomposes as {-1,1} times its nonzero part
res = symmetric_decomposition(ResidueSet.from_elements(11, [-2, -1, 0, 1, 2]))
print("\nsymmetric:", res.interval.elements(), "=",
      res.a.elements(), "*", res.b.elements())
