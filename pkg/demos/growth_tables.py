"""
Counting indecomposables
========================

NI_Q(n) counts the nilpotent indecomposable classes of dimension n.  The
table below compares a tree, a cycle and the loop quivers with one, two and
three loops.
"""

from f1rep.enumeration import brute_force_indecomposables, ni
from f1rep.quiver import cycle_quiver, loop_quiver, path_quiver

N = 5
quivers = [path_quiver(3), cycle_quiver([True, True, True]), loop_quiver(1), loop_quiver(2), loop_quiver(3)]
print("Q".ljust(10) + "".join(str(n).rjust(8) for n in range(1, N + 1)))
for q in quivers:
    n_max = 4 if q.name == "L3" else N
    row = [ni(q, n) for n in range(1, n_max + 1)]
    print(q.name.ljust(10) + "".join(str(v).rjust(8) for v in row))

# the fast count walks connected admissible colored quivers; the slow one
# classifies every representation of the given dimension
for n in range(1, 4):
    print(n, ni(loop_quiver(2), n), len(brute_force_indecomposables(loop_quiver(2), n)))

# one loop never has more than one indecomposable per dimension, while two
# loops already have three in dimension two: no reduction from L2 to L1 can
# be injective on classes
print("NI_L2(2) =", ni(loop_quiver(2), 2), " NI_L1(4) =", ni(loop_quiver(1), 4))
