"""
Skew shapes and commuting two-loop representations
==================================================

A connected convex set of cells in Z^2 becomes a representation of the two
loop quiver: the first loop moves a cell one step right, the second one step
up, and both send a cell to zero when the step leaves the shape.
"""

from f1rep.corr import (NonCommutingError, enumerate_shapes, extension_counterexample,
                        rep_to_shape, shape_to_rep)
from f1rep.hall import ses_count

for c in range(1, 5):
    shapes = enumerate_shapes(2, c)
    print(f"{c} cells: {len(shapes)} shapes")
    for s in shapes:
        print(s.ascii())
        print()

# going back: the maps of the rep recover the shape
s = enumerate_shapes(2, 4)[-1]
print(rep_to_shape(shape_to_rep(s)) == s)

# the end terms commute, the middle term does not
r, m, n = extension_counterexample()
print("sequences:", ses_count(r, m, n))
try:
    rep_to_shape(r)
except NonCommutingError as e:
    print("middle term:", e)
