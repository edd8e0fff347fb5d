"""
Residue-set arithmetic over a prime field
=========================================

Sets of residues mod p are stored as bitmasks, so sumsets, product sets,
dilations and interval tests are a few integer operations each.
"""

from apdecomp import (IntervalSpec, ResidueSet, ap_cover_mod_p, dilate,
                      is_interval, kfold_sum, make_interval, negate,
                      productset, sumset)

# build sets either from explicit elements or as an interval {n+1, ..., n+N}
x = ResidueSet.from_elements(13, [1, 3, 6])
window = make_interval(IntervalSpec(p=13, n=0, N=6))
print("x       =", x.elements())
print("window  =", window.elements())

# sumsets and product sets are elementwise
print("x + x   =", sumset(x, x).elements())
print("3x      =", kfold_sum(3, x).elements())
print("x * {1,5} =", productset(x, ResidueSet.from_elements(13, [1, 5])).elements())

# the product above fills the window exactly; that is a decomposition
assert productset(x, ResidueSet.from_elements(13, [1, 5])).mask == window.mask

# dilation and negation act pointwise and are invertible
print("5 * x   =", dilate(5, x).elements())
print("-x      =", negate(x).elements())

# interval recognition works through wrap-around
wrapped = make_interval(IntervalSpec(p=13, n=10, N=6))
print("wrapped =", wrapped.elements(), "is_interval:", is_interval(wrapped))

# small sets sit inside short arithmetic progressions; the cover search
# returns the shortest one up to a requested length bound
cover = ap_cover_mod_p(ResidueSet.from_elements(11, [1, 4, 7]), 5)
print("AP cover of {1,4,7} mod 11:",
      f"start={cover.start} difference={cover.difference} length={cover.length}")
