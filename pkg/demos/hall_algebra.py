"""
The Hall algebra of nilpotent representations
=============================================

Structure constants count subrepresentations.  For the one loop quiver the
classes are partitions and the simple S squares to a combination of the two
classes of dimension two.
"""

from f1rep.colored import rep_key
from f1rep.hall import HallAlgebra, HallElement, key_str
from f1rep.quiver import loop_quiver
from f1rep.rep import direct_sum_rep, jordan_chain, simple

L1 = loop_quiver(1)
alg = HallAlgebra(L1, 4)
S, C2 = simple(L1, 0), jordan_chain(L1, 2)
names = {key_str(rep_key(direct_sum_rep(S, S))): "S+S", key_str(rep_key(C2)): "chain2"}

s = HallElement.basis(rep_key(S))
for k, c in sorted(alg.product(s, s).to_json().items()):
    print("S * S: coefficient", c, "on", names.get(k, k))

print("classes in S^3:", len(alg.product(alg.product(s, s), s).to_json()))

# the coproduct only sees direct sum splittings, so indecomposables are primitive
for r in (jordan_chain(L1, 3), direct_sum_rep(S, C2)):
    terms = alg.coproduct(HallElement.basis(rep_key(r)))
    print(r.dim, "dimensional class:", len(terms), "coproduct terms")

print("class counts by dimension:", [sum(1 for k in alg.keys() if alg.reps[k].dim == d) for d in range(5)])
