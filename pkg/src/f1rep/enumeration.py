"""
Iso-class enumeration, growth functions and the explicit constructions.

Two independent routes to iso classes are provided:

* brute force: run over every tuple of maps in Rep_d(Q) and bucket by the
  canonical key of the colored quiver;
* generation: grow colored quivers one vertex at a time.  Every connected
  finite graph has a vertex whose removal leaves it connected (a leaf of a
  spanning tree), so connected admissible colored quivers on n vertices all
  arise from those on n-1 vertices by adding one vertex with some arrows.

The second route is the one used for larger dimensions; the first is the
oracle it is checked against.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .colored import (CanonicalKey, gamma_of, graph_key, maximal_paths, rep_from_graph,
                      rep_key)
from .f1lin import F1Map, enumerate_maps
from .quiver import (Quiver, cycle_rank, cycle_structure, fundamental_cycle_pair,
                     is_connected, loop_quiver)
from .rep import (Representation, is_indecomposable, is_nilpotent_rep,
                  zero_rep)

# -- dimension vectors ------------------------------------------------------


def compositions(n: int, k: int):
    """Weak compositions of n into k parts, lexicographic."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def dim_vectors(q: Quiver, n: int):
    return compositions(n, q.num_vertices)


# -- brute force ------------------------------------------------------------

def _conjugacy_reps(d: int) -> list[F1Map]:
    """One partial injection of [d] per conjugacy class."""
    seen = {}
    q = loop_quiver(1)
    for f in enumerate_maps(d, d):
        k = rep_key(Representation(q, (d,), (f,)))
        seen.setdefault(k, f)
    return [seen[k] for k in sorted(seen)]


def _arrow_choices(q: Quiver, dims, a: int, reduce: bool) -> list[F1Map]:
    s, t = q.arrows[a]
    if not reduce:
        return enumerate_maps(dims[s], dims[t])
    # orbit representatives for the action of GL_s x GL_t on this arrow alone
    if s == t:
        return _conjugacy_reps(dims[s])
    return [F1Map(dims[s], dims[t], tuple(range(1, r + 1)) + (0,) * (dims[s] - r))
            for r in range(min(dims[s], dims[t]) + 1)]


def enumerate_classes(q: Quiver, dims, nilpotent_only: bool = True,
                      reduce_first: bool = True) -> dict[CanonicalKey, Representation]:
    """Iso classes with dimension vector ``dims`` by exhaustive search.

    With ``reduce_first`` the first arrow runs only over orbit representatives
    of its own map; every orbit still meets the search space.
    """
    dims = tuple(dims)
    if len(dims) != q.num_vertices:
        raise ValueError("dimension vector does not match the quiver")
    if q.num_arrows == 0:
        r = Representation(q, dims, ())
        return {rep_key(r): r}
    choices = [_arrow_choices(q, dims, a, reduce_first and a == 0) for a in range(q.num_arrows)]
    found: dict[CanonicalKey, Representation] = {}
    for maps in itertools.product(*choices):
        r = Representation(q, dims, maps)
        if nilpotent_only and not is_nilpotent_rep(r):
            continue
        k = rep_key(r)
        if k not in found:
            found[k] = r
    return {k: found[k] for k in sorted(found)}


def enumerate_reps(q: Quiver, dims, nilpotent_only: bool = True) -> list[Representation]:
    return list(enumerate_classes(q, dims, nilpotent_only).values())


def brute_force_classes(q: Quiver, n: int, nilpotent_only: bool = True) -> dict[CanonicalKey, Representation]:
    """All classes of total dimension n (over every dimension vector)."""
    out = {}
    for d in dim_vectors(q, n):
        out.update(enumerate_classes(q, d, nilpotent_only))
    return {k: out[k] for k in sorted(out)}


def brute_force_indecomposables(q: Quiver, n: int, nilpotent_only: bool = True):
    return {k: r for k, r in brute_force_classes(q, n, nilpotent_only).items()
            if is_indecomposable(r)}


# -- generation -------------------------------------------------------------

Graph = tuple  # (vertex colors, sorted arrow triples)


def _descendants(n, arrows) -> list[int]:
    succ = [[] for _ in range(n)]
    for s, t, _ in arrows:
        succ[s].append(t)
    desc = [0] * n
    done = [False] * n

    def visit(x):
        if done[x]:
            return desc[x]
        done[x] = True
        m = 1 << x
        for y in succ[x]:
            m |= visit(y)
        desc[x] = m
        return m

    for x in range(n):
        visit(x)
    return desc


def _one_vertex_extensions(q: Quiver, colors, arrows, nilpotent: bool, sink_only: bool = False):
    """Colored quivers obtained by adding one new vertex (index n).

    Without ``sink_only`` the new vertex must carry at least one arrow, so
    connectivity is preserved.  With ``sink_only`` it receives arrows only,
    possibly none.
    """
    n = len(colors)
    out_used = set()
    in_used = set()
    for s, t, c in arrows:
        out_used.add((s, c))
        in_used.add((t, c))
    desc = _descendants(n, arrows) if nilpotent and not sink_only else None
    for c in range(q.num_vertices):
        per_arrow = []
        for a, (s, t) in enumerate(q.arrows):
            if s != c and t != c:
                continue
            outs = [None]
            ins = [None]
            if s == c and not sink_only:
                outs += [y for y in range(n) if colors[y] == t and (y, a) not in in_used]
            if t == c:
                ins += [y for y in range(n) if colors[y] == s and (y, a) not in out_used]
            opts = [(a, o, i) for o in outs for i in ins]
            if s == t == c and not nilpotent:
                opts.append((a, n, n))
            per_arrow.append(opts)
        for combo in itertools.product(*per_arrow):
            new = list(arrows)
            outmask = 0
            inmask = 0
            linked = False
            for a, o, i in combo:
                if o == n:
                    new.append((n, n, a))
                    continue
                if o is not None:
                    new.append((n, o, a))
                    linked = True
                    if desc is not None:
                        outmask |= desc[o]
                if i is not None:
                    new.append((i, n, a))
                    linked = True
                    inmask |= 1 << i
            if not sink_only and not linked:
                continue
            if desc is not None and outmask & inmask:
                continue
            yield colors + (c,), tuple(sorted(new))


class _Generator:
    """Level-by-level tables of connected colored quivers for one quiver."""

    def __init__(self, q: Quiver, nilpotent: bool):
        self.q = q
        self.nilpotent = nilpotent
        self.levels: list[dict[CanonicalKey, Graph]] = [{}]

    def _first_level(self):
        q = self.q
        level = {}
        for c in range(q.num_vertices):
            loops = [a for a, (s, t) in enumerate(q.arrows) if s == t == c]
            subsets = [()] if self.nilpotent else [
                sub for k in range(len(loops) + 1) for sub in itertools.combinations(loops, k)]
            for sub in subsets:
                g = ((c,), tuple((0, 0, a) for a in sub))
                level.setdefault(graph_key(1, g[0], g[1]), g)
        return level

    def level(self, n: int) -> dict[CanonicalKey, Graph]:
        while len(self.levels) <= n:
            m = len(self.levels)
            if m == 1:
                nxt = self._first_level()
            else:
                nxt = {}
                for colors, arrows in self.levels[m - 1].values():
                    for g in _one_vertex_extensions(self.q, colors, arrows, self.nilpotent):
                        k = graph_key(m, g[0], g[1])
                        if k not in nxt:
                            nxt[k] = g
                nxt = {k: nxt[k] for k in sorted(nxt)}
            self.levels.append(nxt)
        return self.levels[n]


_GENERATORS: dict[tuple[Quiver, bool], _Generator] = {}


def _generator(q: Quiver, nilpotent: bool) -> _Generator:
    key = (q, nilpotent)
    if key not in _GENERATORS:
        _GENERATORS[key] = _Generator(q, nilpotent)
    return _GENERATORS[key]


def connected_graphs(q: Quiver, n: int, nilpotent: bool = True) -> dict[CanonicalKey, Graph]:
    """Connected (admissible, if ``nilpotent``) colored quivers on n vertices up to iso."""
    if n <= 0:
        return {}
    return _generator(q, nilpotent).level(n)


def indecomposables(q: Quiver, n: int, nilpotent: bool = True) -> dict[CanonicalKey, Representation]:
    return {k: rep_from_graph(q, g[0], g[1]) for k, g in connected_graphs(q, n, nilpotent).items()}


def all_nilpotent_graphs(q: Quiver, n: int) -> dict[CanonicalKey, Graph]:
    """All admissible colored quivers on n vertices, by adding global sinks.

    Independent of the Krull-Schmidt route: a nonempty acyclic Gamma always
    has a sink, and deleting it leaves an admissible colored quiver.
    """
    level = {graph_key(0, (), ()): ((), ())}
    for m in range(1, n + 1):
        nxt = {}
        for colors, arrows in level.values():
            for g in _one_vertex_extensions(q, colors, arrows, True, sink_only=True):
                k = graph_key(m, g[0], g[1])
                if k not in nxt:
                    nxt[k] = g
        level = nxt
    return {k: level[k] for k in sorted(level)}


def clear_cache():
    _GENERATORS.clear()


# -- growth functions -------------------------------------------------------

def ni(q: Quiver, n: int, method: str = "generate") -> int:
    """NI_Q(n): nilpotent indecomposable classes of total dimension n."""
    if n <= 0:
        return 0
    if method == "generate":
        return len(connected_graphs(q, n, True))
    if method == "brute":
        return len(brute_force_indecomposables(q, n, True))
    raise ValueError(f"unknown method {method!r}")


def i_growth(q: Quiver, n: int, method: str = "generate") -> int:
    """I_Q(n): all indecomposable classes of total dimension n."""
    if n <= 0:
        return 0
    if method == "generate":
        return len(connected_graphs(q, n, False))
    if method == "brute":
        return len(brute_force_indecomposables(q, n, False))
    raise ValueError(f"unknown method {method!r}")


def nilpotent_class_count(q: Quiver, n: int) -> int:
    """Number of all nilpotent classes of total dimension n."""
    return len(all_nilpotent_graphs(q, n))


def nil_leq_check(q: Quiver, q2: Quiver, C: int, D, n_max: int) -> bool:
    """Finite-prefix witness for NI_q(n) <= D * NI_q2(C n), 1 <= n <= n_max.

    This says nothing about the asymptotic relation itself.
    """
    D = Fraction(D)
    return all(ni(q, n) <= D * ni(q2, C * n) for n in range(1, n_max + 1))


# -- iso class tables -------------------------------------------------------

@dataclass
class IsoClassEntry:
    key: CanonicalKey
    rep: Representation
    indecomposable: bool
    nilpotent: bool


@dataclass
class IsoClassTable:
    quiver: Quiver
    by_dim: dict[int, list[IsoClassEntry]] = field(default_factory=dict)

    @classmethod
    def build(cls, q: Quiver, max_dim: int, nilpotent_only: bool = True,
              method: str = "brute") -> "IsoClassTable":
        table = cls(q)
        for n in range(max_dim + 1):
            if method == "brute":
                classes = brute_force_classes(q, n, nilpotent_only)
            elif method == "generate":
                if not nilpotent_only:
                    raise ValueError("generation of all classes is only implemented for nilpotent ones")
                classes = {k: rep_from_graph(q, g[0], g[1]) for k, g in all_nilpotent_graphs(q, n).items()}
            else:
                raise ValueError(f"unknown method {method!r}")
            table.by_dim[n] = [IsoClassEntry(k, r, is_indecomposable(r), is_nilpotent_rep(r))
                               for k, r in classes.items()]
        return table

    @property
    def max_dim(self) -> int:
        return max(self.by_dim) if self.by_dim else -1

    def entries(self):
        for n in sorted(self.by_dim):
            yield from self.by_dim[n]

    def lookup(self, key: CanonicalKey) -> IsoClassEntry:
        for e in self.entries():
            if e.key == key:
                return e
        raise KeyError(key)

    def to_json(self) -> dict:
        return {
            "quiver": self.quiver.to_json(),
            "classes": {e.key.hex(): {"dim": e.rep.dim, "dims": list(e.rep.dims),
                                      "indecomposable": e.indecomposable, "nilpotent": e.nilpotent,
                                      "rep": e.rep.to_json()}
                        for e in self.entries()},
        }


def ni_table_rows(q: Quiver, n_max: int, with_i: bool = True) -> list[dict]:
    rows = []
    for n in range(1, n_max + 1):
        row = {"quiver": q.name or "", "n": n, "NI": ni(q, n)}
        row["I"] = i_growth(q, n) if with_i else ""
        rows.append(row)
    return rows


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=["quiver", "n", "NI", "I"], lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def classes_to_json(classes: dict[CanonicalKey, Representation]) -> str:
    return json.dumps({k.hex(): r.to_json() for k, r in classes.items()}, sort_keys=True, indent=1)


# -- explicit families on cycles --------------------------------------------

def _place_path(q: Quiver, verts, arrows, n: int, start: int):
    """Element k (1..n) at verts[(start + k - 1) % l], joined to k+1 along the cycle."""
    ell = len(verts)
    place = [verts[(start + k - 1) % ell] for k in range(1, n + 1)]
    edges = []
    for k in range(1, n):
        j = (start + k - 1) % ell
        a = arrows[j]
        if q.arrows[a][0] == verts[j]:
            edges.append((k, k + 1, a))
        else:
            edges.append((k + 1, k, a))
    return place, edges


def _from_elements(q: Quiver, place, edges) -> Representation:
    colors = tuple(place)
    arrows = tuple(sorted((s - 1, t - 1, a) for s, t, a in edges))
    return rep_from_graph(q, colors, arrows)


def _cycle_order(c: Quiver):
    if not is_connected(c) or cycle_rank(c) != 1 or c.num_arrows != c.num_vertices:
        raise ValueError("expected a cycle quiver")
    ell = c.num_vertices
    verts = list(range(ell))
    arrows = []
    for j in range(ell):
        k = (j + 1) % ell
        cand = [a for a, (s, t) in enumerate(c.arrows) if {s, t} == {j, k} and a not in arrows]
        if ell == 2:
            # two parallel edges: arrow j is the j-th one
            cand = [j]
        if not cand:
            raise ValueError("cycle quiver must use the standard vertex ordering")
        arrows.append(cand[0])
    return verts, arrows


def build_I(c: Quiver, n: int, i: int = 0) -> Representation:
    """I_[n,i]: a string of n elements winding around the cycle from vertex i."""
    verts, arrows = _cycle_order(c)
    if n == 0:
        return zero_rep(c)
    place, edges = _place_path(c, verts, arrows, n, i)
    return _from_elements(c, place, edges)


def build_I_tilde(c: Quiver, w: int, i: int = 0) -> Representation:
    """The band closing I_[w l, i] into a cycle; only for acyclic cycles."""
    verts, arrows = _cycle_order(c)
    if c.has_oriented_cycle():
        raise ValueError("construction requires acyclic cycle")
    ell = len(verts)
    n = w * ell
    place, edges = _place_path(c, verts, arrows, n, i)
    # the arrow between the vertex of n and the vertex of 1
    j = (i + n - 1) % ell
    a = arrows[j]
    if c.arrows[a][0] == place[0]:
        edges.append((1, n, a))
    else:
        edges.append((n, 1, a))
    return _from_elements(c, place, edges)


def build_M(c: Quiver, n: int) -> Representation:
    """M(n): [n] at every vertex, arrow 0 acting by k -> k-1, the rest identity."""
    shift = F1Map(n, n, tuple(range(n)))
    ident = F1Map(n, n, tuple(range(1, n + 1)))
    return Representation(c, (n,) * c.num_vertices,
                          tuple(shift if a == 0 else ident for a in range(c.num_arrows)))


def cycle_family_keys(c: Quiver, n: int) -> set[CanonicalKey]:
    """Keys of the I and (for acyclic cycles) I-tilde families in dimension n."""
    ell = c.num_vertices
    keys = {rep_key(build_I(c, n, i)) for i in range(ell)}
    if not c.has_oriented_cycle() and n % ell == 0:
        keys |= {rep_key(build_I_tilde(c, n // ell, i)) for i in range(ell)}
    return keys


# -- functors between loop quivers ------------------------------------------

def delete_loop(m: Representation, i: int) -> Representation:
    """D_i: forget loop i (0-based), renumbering the later ones."""
    q = m.quiver
    if not q.is_loop_quiver():
        raise ValueError("delete_loop needs a loop quiver")
    maps = m.maps[:i] + m.maps[i + 1:]
    return Representation(loop_quiver(q.num_arrows - 1), m.dims, maps)


def f_reduce(m: Representation) -> Representation:
    """F: nilpotent L_n representations to L_{n-1}, doubling the dimension.

    The top copy is D_{n-1}(M) (loop n-1 deleted, loop n renamed n-1), the
    bottom copy is D_n(M); for every shared color i < n-1 and every maximal
    i-colored path u -> v of Gamma_M an i-colored arrow joins top v to bottom u.
    For n = 2 there is no shared color; then a color-0 arrow joins top x to
    bottom x whenever that keeps the color-0 strings as paths.
    """
    q = m.quiver
    if not q.is_loop_quiver() or q.num_arrows < 2:
        raise ValueError("f_reduce needs a representation of L_n with n >= 2")
    if not is_nilpotent_rep(m):
        raise ValueError("f_reduce needs a nilpotent representation")
    n = q.num_arrows
    g = gamma_of(m)
    d = g.num_vertices
    arrows = []
    for s, t, c in g.arrows:
        # top copy: vertices 0..d-1; bottom copy: d..2d-1 (0-based colors)
        if c == n - 1:
            arrows.append((s, t, n - 2))
        elif c != n - 2:
            arrows.append((s, t, c))
        if c != n - 1:
            arrows.append((s + d, t + d, c))
    if n >= 3:
        for i in range(n - 2):
            for path in maximal_paths(g, i):
                arrows.append((path[-1], path[0] + d, i))
    else:
        top_out = {s for s, _, c in arrows if c == 0 and s < d}
        bottom_in = {t for _, t, c in arrows if c == 0 and t >= d}
        for x in range(d):
            if x not in top_out and x + d not in bottom_in:
                arrows.append((x, x + d, 0))
    return rep_from_graph(loop_quiver(n - 1), (0,) * (2 * d), tuple(sorted(arrows)))


def f_reduce_parts(m: Representation):
    """(F(M), D_{n-1}(M), D_n(M)) for the gluing sequence 0 -> D_n -> F -> D_{n-1} -> 0."""
    n = m.quiver.num_arrows
    top = delete_loop(m, n - 2)
    bottom = delete_loop(m, n - 1)
    return f_reduce(m), top, bottom


def reduce_to(m: Representation, target: int) -> Representation:
    """Apply F repeatedly until the quiver is L_target."""
    while m.quiver.num_arrows > target:
        m = f_reduce(m)
    return m


def embed_loops(m: Representation) -> Representation:
    """Leaf embedding of a nilpotent Q-representation into L_{|Q0|+|Q1|}.

    Every element x gets a new leaf with an arrow into x colored by the
    Q-vertex of x; the arrow colors alpha of Q become |Q0| + alpha.
    """
    if not is_nilpotent_rep(m):
        raise ValueError("embed_loops needs a nilpotent representation")
    q = m.quiver
    g = gamma_of(m)
    d = g.num_vertices
    nq = q.num_vertices
    arrows = [(s, t, nq + c) for s, t, c in g.arrows]
    arrows += [(d + x, x, g.vertex_colors[x]) for x in range(d)]
    return rep_from_graph(loop_quiver(nq + q.num_arrows), (0,) * (2 * d), tuple(sorted(arrows)))


embed_L2 = embed_loops


def rank2_support(q: Quiver):
    """The subquiver S = C_a u C_b u w and the distinguished arrows (a, b)."""
    pair = fundamental_cycle_pair(q)
    if pair is None:
        raise ValueError("embed_rank2 needs cycle rank at least 2")
    ca, cb, w, a, b = pair
    verts = ca.vertices | cb.vertices | w.vertices
    arrows = ca.arrows | cb.arrows | w.arrows
    return verts, arrows, a, b


def embed_rank2(m: Representation, q: Quiver) -> Representation:
    """Carry an L_2-representation onto a quiver of cycle rank >= 2."""
    if m.quiver.num_vertices != 1 or m.quiver.num_arrows != 2:
        raise ValueError("embed_rank2 needs an L2 representation")
    if not is_connected(q):
        raise ValueError("embed_rank2 needs a connected quiver")
    verts, arrows, a, b = rank2_support(q)
    d = m.dims[0]
    dims = tuple(d if v in verts else 0 for v in range(q.num_vertices))
    ident = F1Map(d, d, tuple(range(1, d + 1)))
    maps = []
    for x, (s, t) in enumerate(q.arrows):
        if x == a:
            maps.append(m.maps[0])
        elif x == b:
            maps.append(m.maps[1])
        elif x in arrows:
            maps.append(ident)
        else:
            maps.append(F1Map(dims[s], dims[t], (0,) * dims[s]))
    return Representation(q, dims, tuple(maps))


# -- proper pseudotrees -----------------------------------------------------

def pseudotree_family(q: Quiver, n: int) -> list[Representation]:
    """n pairwise non-isomorphic indecomposables of dimension 3 l n.

    Start from the string I_[N,1] around the cycle (N = 3 l n), read from a
    cycle vertex v1 carrying a pendant arrow; the i-th member has pendant
    leaves glued at the first i elements over v1 and the last i elements of
    the string removed.
    """
    verts0, _ = cycle_structure(q)
    on_cycle = set(verts0)
    pendant = None
    for a, (s, t) in enumerate(q.arrows):
        if (s in on_cycle) != (t in on_cycle):
            pendant = a
            break
    if pendant is None:
        raise ValueError("pseudotree_family needs a pendant arrow off the cycle")
    ps, pt = q.arrows[pendant]
    v1 = ps if ps in on_cycle else pt
    verts, arrows = cycle_structure(q, v1)
    ell = len(verts)
    N = 3 * ell * n
    place, edges = _place_path(q, verts, arrows, N, 0)
    out = []
    for i in range(n):
        keep = N - i
        pl = place[:keep]
        ed = [e for e in edges if e[0] <= keep and e[1] <= keep]
        for j in range(i):
            x = j * ell + 1
            leaf = len(pl) + 1
            if ps == v1:
                pl = pl + [pt]
                ed = ed + [(x, leaf, pendant)]
            else:
                pl = pl + [ps]
                ed = ed + [(leaf, x, pendant)]
        out.append(_from_elements(q, pl, ed))
    return out


__all__ = [
    "compositions", "dim_vectors", "enumerate_classes", "enumerate_reps", "brute_force_classes",
    "brute_force_indecomposables", "connected_graphs", "indecomposables", "all_nilpotent_graphs",
    "ni", "i_growth", "nilpotent_class_count", "nil_leq_check", "IsoClassEntry", "IsoClassTable",
    "ni_table_rows", "rows_to_csv", "classes_to_json", "build_I", "build_I_tilde", "build_M",
    "cycle_family_keys", "delete_loop", "f_reduce", "f_reduce_parts", "reduce_to", "embed_loops",
    "embed_L2", "rank2_support", "embed_rank2", "pseudotree_family",
]
