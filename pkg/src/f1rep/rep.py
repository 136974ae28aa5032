"""
Representations of a quiver over F1 and their morphisms.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import f1lin
from .f1lin import F1Map
from .quiver import Quiver


@dataclass(frozen=True)
class Representation:
    quiver: Quiver
    dims: tuple[int, ...]
    maps: tuple[F1Map, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        maps = tuple(self.maps)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "maps", maps)
        q = self.quiver
        if len(dims) != q.num_vertices:
            raise ValueError(f"dimension vector {dims} does not match {q}")
        if any(d < 0 for d in dims):
            raise ValueError("dimensions must be non-negative")
        if len(maps) != q.num_arrows:
            raise ValueError(f"expected {q.num_arrows} maps, got {len(maps)}")
        for a, f in enumerate(maps):
            s, t = q.arrows[a]
            if (f.src, f.tgt) != (dims[s], dims[t]):
                raise ValueError(
                    f"arrow {a}: map is [{f.src}]->[{f.tgt}], vertices have dims {dims[s]}, {dims[t]}")

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def elements(self):
        """Pairs (vertex, k) for every nonzero element."""
        return [(v, k) for v, d in enumerate(self.dims) for k in range(1, d + 1)]

    def to_json(self) -> dict:
        return {
            "quiver": self.quiver.to_json(),
            "dims": list(self.dims),
            "maps": {str(a): f.to_json() for a, f in enumerate(self.maps)},
        }

    @classmethod
    def from_json(cls, data: dict, quiver: Quiver | None = None) -> "Representation":
        q = quiver if quiver is not None else Quiver.from_json(data["quiver"])
        maps = data["maps"]
        if isinstance(maps, dict):
            maps = [maps[str(a)] for a in range(q.num_arrows)]
        return cls(q, tuple(data["dims"]), tuple(F1Map.from_json(m) for m in maps))


@dataclass(frozen=True)
class Morphism:
    source: Representation
    target: Representation
    components: tuple[F1Map, ...]

    def is_iso(self) -> bool:
        return all(c.is_iso() for c in self.components)

    def is_injective(self) -> bool:
        return all(c.is_injective() for c in self.components)

    def is_surjective(self) -> bool:
        return all(c.is_surjective() for c in self.components)

    def image(self) -> tuple[frozenset[int], ...]:
        return tuple(c.image_set for c in self.components)

    def kernel(self) -> tuple[frozenset[int], ...]:
        return tuple(c.kernel for c in self.components)


@dataclass(frozen=True)
class SubRep:
    parent: Representation
    subsets: tuple[frozenset[int], ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.subsets)

    def is_closed(self) -> bool:
        r = self.parent
        for a, f in enumerate(r.maps):
            s, t = r.quiver.arrows[a]
            for k in self.subsets[s]:
                j = f(k)
                if j and j not in self.subsets[t]:
                    return False
        return True


# -- constructors -----------------------------------------------------------

def make_rep(q: Quiver, dims, maps) -> Representation:
    """Build a representation from per-arrow ``{k: image}`` dicts or F1Maps."""
    dims = tuple(dims)
    out = []
    for a, m in enumerate(maps):
        s, t = q.arrows[a]
        out.append(m if isinstance(m, F1Map) else f1lin.from_dict(dims[s], dims[t], m))
    return Representation(q, dims, tuple(out))


def zero_rep(q: Quiver) -> Representation:
    return Representation(q, (0,) * q.num_vertices,
                          tuple(f1lin.zero_map(0, 0) for _ in q.arrows))


def simple(q: Quiver, v: int) -> Representation:
    dims = tuple(1 if u == v else 0 for u in range(q.num_vertices))
    return Representation(q, dims, tuple(f1lin.zero_map(dims[s], dims[t]) for s, t in q.arrows))


def jordan_chain(q: Quiver, length: int, arrow: int = 0) -> Representation:
    """On a loop quiver: the chain length -> ... -> 2 -> 1 -> 0 along one loop."""
    if not q.is_loop_quiver():
        raise ValueError("jordan_chain needs a one-vertex quiver")
    maps = []
    for a in range(q.num_arrows):
        if a == arrow:
            maps.append(F1Map(length, length, tuple(range(length))))
        else:
            maps.append(f1lin.zero_map(length, length))
    return Representation(q, (length,), tuple(maps))


# -- structure --------------------------------------------------------------

def is_nilpotent_rep(v: Representation) -> bool:
    """Nilpotent iff the colored quiver of v has no oriented cycle."""
    succ: dict[tuple[int, int], list[tuple[int, int]]] = {x: [] for x in v.elements()}
    indeg = {x: 0 for x in succ}
    for a, f in enumerate(v.maps):
        s, t = v.quiver.arrows[a]
        for k in range(1, f.src + 1):
            j = f(k)
            if j:
                succ[(s, k)].append((t, j))
                indeg[(t, j)] += 1
    stack = [x for x, d in indeg.items() if d == 0]
    seen = 0
    while stack:
        x = stack.pop()
        seen += 1
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                stack.append(y)
    return seen == len(succ)


def direct_sum_rep(v: Representation, w: Representation) -> Representation:
    if v.quiver != w.quiver:
        raise ValueError("direct sum of representations of different quivers")
    dims = tuple(a + b for a, b in zip(v.dims, w.dims))
    maps = tuple(f1lin.direct_sum(f, g) for f, g in zip(v.maps, w.maps))
    return Representation(v.quiver, dims, maps)


def direct_sum_all(q: Quiver, reps) -> Representation:
    out = zero_rep(q)
    for r in reps:
        out = direct_sum_rep(out, r)
    return out


def restrict(r: Representation, subsets) -> Representation:
    """Full sub-object on the given per-vertex element sets, relabelled in order.

    Images leaving the chosen sets are sent to 0, so this serves both for
    subrepresentations and for quotients.
    """
    subsets = [sorted(s) for s in subsets]
    index = [{k: i for i, k in enumerate(s, 1)} for s in subsets]
    dims = tuple(len(s) for s in subsets)
    maps = []
    for a, f in enumerate(r.maps):
        s, t = r.quiver.arrows[a]
        maps.append(F1Map(dims[s], dims[t], tuple(index[t].get(f(k), 0) for k in subsets[s])))
    return Representation(r.quiver, dims, tuple(maps))


def subrep_as_rep(s: SubRep) -> Representation:
    return restrict(s.parent, s.subsets)


def quotient(r: Representation, s: SubRep) -> Representation:
    if s.parent != r or not s.is_closed():
        raise ValueError("quotient needs a subrepresentation of r")
    rest = [frozenset(range(1, d + 1)) - sub for d, sub in zip(r.dims, s.subsets)]
    return restrict(r, rest)


def subrepresentations(r: Representation) -> list[SubRep]:
    """All subsets of elements closed under every arrow map.

    Elements are decided one at a time; choosing an element forces its
    successors in, excluding one forces its predecessors out.
    """
    elems = r.elements()
    succ: dict[tuple[int, int], list[tuple[int, int]]] = {x: [] for x in elems}
    pred: dict[tuple[int, int], list[tuple[int, int]]] = {x: [] for x in elems}
    for a, f in enumerate(r.maps):
        s, t = r.quiver.arrows[a]
        for k in range(1, f.src + 1):
            j = f(k)
            if j:
                succ[(s, k)].append((t, j))
                pred[(t, j)].append((s, k))

    out: list[SubRep] = []

    def propagate(state, x, val):
        stack = [x]
        if state.get(x, val) != val:
            return False
        state[x] = val
        nbrs = succ if val else pred
        while stack:
            y = stack.pop()
            for z in nbrs[y]:
                cur = state.get(z)
                if cur is None:
                    state[z] = val
                    stack.append(z)
                elif cur != val:
                    return False
        return True

    def rec(i, state):
        while i < len(elems) and elems[i] in state:
            i += 1
        if i == len(elems):
            subsets = [set() for _ in r.dims]
            for (v, k), val in state.items():
                if val:
                    subsets[v].add(k)
            out.append(SubRep(r, tuple(frozenset(s) for s in subsets)))
            return
        for val in (False, True):
            new = dict(state)
            if propagate(new, elems[i], val):
                rec(i + 1, new)

    rec(0, {})
    out.sort(key=lambda s: (sum(s.dims), [sorted(x) for x in s.subsets]))
    return out


# -- morphisms --------------------------------------------------------------

def hom_set(v: Representation, w: Representation, kind: str = "all") -> list[Morphism]:
    """All morphisms v -> w by backtracking over vertex components.

    ``kind`` restricts components to injective/surjective/iso maps.
    """
    if v.quiver != w.quiver:
        raise ValueError("hom_set between representations of different quivers")
    q = v.quiver
    candidates = []
    for u in range(q.num_vertices):
        a, b = v.dims[u], w.dims[u]
        if kind == "all":
            cands = f1lin.enumerate_maps(a, b)
        elif kind in ("injective", "iso"):
            if kind == "iso" and a != b:
                return []
            cands = f1lin.enumerate_injections(a, b)
        elif kind == "surjective":
            cands = [f for f in f1lin.enumerate_maps(a, b) if f.is_surjective()]
        else:
            raise ValueError(f"unknown kind {kind!r}")
        candidates.append(cands)

    # arrows become checkable once both endpoints have been assigned
    checks_at: list[list[int]] = [[] for _ in range(q.num_vertices)]
    for a, (s, t) in enumerate(q.arrows):
        checks_at[max(s, t)].append(a)

    out: list[Morphism] = []
    chosen: list[F1Map] = []

    def rec(u):
        if u == q.num_vertices:
            out.append(Morphism(v, w, tuple(chosen)))
            return
        for phi in candidates[u]:
            chosen.append(phi)
            ok = True
            for a in checks_at[u]:
                s, t = q.arrows[a]
                if f1lin.compose(w.maps[a], chosen[s]) != f1lin.compose(chosen[t], v.maps[a]):
                    ok = False
                    break
            if ok:
                rec(u + 1)
            chosen.pop()

    rec(0)
    return out


def is_morphism(v: Representation, w: Representation, components) -> bool:
    q = v.quiver
    for a, (s, t) in enumerate(q.arrows):
        if f1lin.compose(w.maps[a], components[s]) != f1lin.compose(components[t], v.maps[a]):
            return False
    return True


def aut_count(r: Representation) -> int:
    return len(hom_set(r, r, kind="iso"))


def act(r: Representation, g) -> Representation:
    """Transport r along automorphisms g[v] of each vertex space (phi f phi^-1)."""
    maps = []
    for a, f in enumerate(r.maps):
        s, t = r.quiver.arrows[a]
        maps.append(f1lin.compose(g[t], f1lin.compose(f, f1lin.inverse(g[s]))))
    return Representation(r.quiver, r.dims, tuple(maps))


def orbit(r: Representation) -> set[tuple[F1Map, ...]]:
    """GL_d(F1)-orbit of r as a set of map tuples (brute force, small dims only)."""
    groups = [f1lin.enumerate_automorphisms(d) for d in r.dims]
    return {act(r, g).maps for g in product(*groups)}


def are_isomorphic_bruteforce(v: Representation, w: Representation) -> bool:
    if v.quiver != w.quiver or v.dims != w.dims:
        return False
    return w.maps in orbit(v)


def decompose(r: Representation) -> list[Representation]:
    """Indecomposable summands, one per connected component of the colored quiver."""
    elems = r.elements()
    parent = {x: x for x in elems}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, f in enumerate(r.maps):
        s, t = r.quiver.arrows[a]
        for k in range(1, f.src + 1):
            j = f(k)
            if j:
                x, y = find((s, k)), find((t, j))
                if x != y:
                    parent[max(x, y)] = min(x, y)
    groups: dict = {}
    for x in elems:
        groups.setdefault(find(x), []).append(x)
    out = []
    for root in sorted(groups):
        subsets = [set() for _ in r.dims]
        for v, k in groups[root]:
            subsets[v].add(k)
        out.append(restrict(r, subsets))
    return out


def is_indecomposable(r: Representation) -> bool:
    return r.dim > 0 and len(decompose(r)) == 1


def compose_paths(r: Representation, word) -> F1Map:
    """Composite of arrow maps along ``word`` (traversal order)."""
    q = r.quiver
    if not word:
        raise ValueError("empty word")
    out = r.maps[word[0]]
    for prev, a in zip(word, word[1:]):
        if q.target(prev) != q.source(a):
            raise ValueError("word is not a path")
        out = f1lin.compose(r.maps[a], out)
    return out
