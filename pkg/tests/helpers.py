"""Independent enumeration used as an oracle in several test modules."""

from itertools import product

from f1rep.enumeration import compositions
from f1rep.f1lin import enumerate_maps
from f1rep.rep import Representation


def all_reps(q, n):
    """Every representation of total dimension n, not reduced by isomorphism."""
    for dims in compositions(n, q.num_vertices):
        choices = [enumerate_maps(dims[s], dims[t]) for s, t in q.arrows]
        for maps in product(*choices):
            yield Representation(q, dims, tuple(maps))
