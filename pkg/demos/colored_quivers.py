"""
Colored quivers and canonical keys
==================================

A representation over F1 is a family of partial injections.  Drawing every
nonzero element as a node and every nonzero value f_a(x) = y as an arrow of
color a gives a small colored digraph that determines the representation up
to isomorphism.
"""

from f1rep.colored import check_admissible, gamma_of, gamma_to_dot, rep_key
from f1rep.hall import key_str
from f1rep.quiver import loop_quiver
from f1rep.rep import decompose, direct_sum_rep, make_rep

L2 = loop_quiver(2)

# two loops on a three element set; f1 shifts 3 -> 2 -> 1, f2 sends 3 -> 1
V = make_rep(L2, (3,), [{1: 0, 2: 1, 3: 2}, {1: 0, 2: 0, 3: 1}])
g = gamma_of(V)
print("arrows (source, target, color):", g.arrows)
print("admissible:", check_admissible(g))
print(gamma_to_dot(g))

# swapping the names 1 and 3 does not change the key
W = make_rep(L2, (3,), [{1: 2, 2: 3, 3: 0}, {1: 3, 2: 0, 3: 0}])
print("same key after relabelling:", rep_key(V) == rep_key(W))

# a cyclic rep: f2 permutes the elements, so it is not nilpotent
C = make_rep(L2, (3,), [{1: 0, 2: 0, 3: 1}, {1: 2, 2: 3, 3: 0}])
print("cyclic Gamma admissible as a nilpotent graph:", check_admissible(gamma_of(C)))

# direct sums are disjoint unions of graphs, and decompose splits them back
S = direct_sum_rep(V, V)
parts = decompose(S)
print("summands:", len(parts), [key_str(rep_key(p)) for p in parts])
