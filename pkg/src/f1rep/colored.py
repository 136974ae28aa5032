"""
The colored quiver of a representation.

Vertices of Gamma_V are the nonzero elements of V, colored by the quiver
vertex they live over; an arrow i -> j of color a records f_a(i) = j.
Because every f_a is a partial injection, each vertex of Gamma_V has at most
one outgoing and one incoming arrow of each color.  That makes canonical
labelling cheap: once one vertex of a connected component is fixed, every
other vertex is reached by a unique word of (direction, color) steps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .f1lin import F1Map
from .quiver import Quiver
from .rep import Representation, hom_set, is_nilpotent_rep

CanonicalKey = bytes


class InadmissibleError(ValueError):
    """Colored quiver violating one of the conditions characterising Gamma_V."""


@dataclass(frozen=True)
class ColoredQuiver:
    vertex_colors: tuple[int, ...]
    arrows: tuple[tuple[int, int, int], ...]
    quiver: Quiver | None = None
    labels: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "vertex_colors", tuple(self.vertex_colors))
        object.__setattr__(self, "arrows", tuple(tuple(a) for a in self.arrows))
        n = len(self.vertex_colors)
        for s, t, _ in self.arrows:
            if not (0 <= s < n and 0 <= t < n):
                raise ValueError(f"arrow ({s},{t}) outside the vertex set")

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_colors)

    def out_map(self) -> list[dict[int, int]]:
        """out[x][color] = target, assuming the functional condition holds."""
        out: list[dict[int, int]] = [dict() for _ in self.vertex_colors]
        for s, t, c in self.arrows:
            out[s][c] = t
        return out

    def relabel(self, perm) -> "ColoredQuiver":
        """Move vertex x to perm[x]."""
        n = self.num_vertices
        colors = [0] * n
        for x in range(n):
            colors[perm[x]] = self.vertex_colors[x]
        arrows = sorted((perm[s], perm[t], c) for s, t, c in self.arrows)
        return ColoredQuiver(tuple(colors), tuple(arrows), self.quiver)

    def recolor_arrows(self, mapping) -> "ColoredQuiver":
        return ColoredQuiver(self.vertex_colors,
                             tuple((s, t, mapping[c]) for s, t, c in self.arrows), self.quiver)

    def components(self) -> list[list[int]]:
        return _components(self.num_vertices, self.arrows)

    def is_connected(self) -> bool:
        return self.num_vertices > 0 and len(self.components()) == 1

    def induced(self, verts) -> "ColoredQuiver":
        """Full subquiver on ``verts`` (renumbered in increasing order)."""
        verts = sorted(verts)
        idx = {x: i for i, x in enumerate(verts)}
        arrows = tuple((idx[s], idx[t], c) for s, t, c in self.arrows if s in idx and t in idx)
        return ColoredQuiver(tuple(self.vertex_colors[x] for x in verts), arrows, self.quiver)

    def to_dot(self, name: str = "Gamma") -> str:
        return gamma_to_dot(self, name)


# -- construction and reconstruction ----------------------------------------

def gamma_of(v: Representation) -> ColoredQuiver:
    elems = v.elements()
    index = {x: i for i, x in enumerate(elems)}
    arrows = []
    for a, f in enumerate(v.maps):
        s, t = v.quiver.arrows[a]
        for k in range(1, f.src + 1):
            j = f(k)
            if j:
                arrows.append((index[(s, k)], index[(t, j)], a))
    arrows.sort()
    return ColoredQuiver(tuple(u for u, _ in elems), tuple(arrows), v.quiver, tuple(elems))


def admissibility_violations(g: ColoredQuiver, q: Quiver | None = None) -> list[str]:
    """Names of the violated conditions (empty when g is admissible)."""
    q = q if q is not None else g.quiver
    problems = []
    if q is not None:
        for s, t, c in g.arrows:
            if not (0 <= c < q.num_arrows):
                problems.append("color projection: arrow color outside Q1")
                break
            if (g.vertex_colors[s], g.vertex_colors[t]) != q.arrows[c]:
                problems.append("color projection: arrow colors inconsistent with vertex colors")
                break
        if any(not (0 <= c < q.num_vertices) for c in g.vertex_colors):
            problems.append("color projection: vertex color outside Q0")
    outs, ins = set(), set()
    for s, t, c in g.arrows:
        if (s, c) in outs or (t, c) in ins:
            problems.append("monochromatic paths: a vertex has two arrows of one color in the same direction")
            break
        outs.add((s, c))
        ins.add((t, c))
    if _has_cycle(g.num_vertices, g.arrows):
        problems.append("acyclicity: oriented cycle present")
    return problems


def check_admissible(g: ColoredQuiver, q: Quiver | None = None) -> bool:
    return not admissibility_violations(g, q)


def rep_of(g: ColoredQuiver, q: Quiver | None = None, nilpotent: bool = True) -> Representation:
    """The representation whose colored quiver is g.

    With ``nilpotent=False`` oriented cycles are allowed and the result is a
    general (possibly non-nilpotent) representation.
    """
    q = q if q is not None else g.quiver
    if q is None:
        raise ValueError("rep_of needs the underlying quiver")
    problems = admissibility_violations(g, q)
    if not nilpotent:
        problems = [p for p in problems if not p.startswith("acyclicity")]
    if problems:
        raise InadmissibleError("; ".join(problems))
    return _rep_from_graph(q, g.vertex_colors, g.arrows)


def rep_from_graph(q: Quiver, vertex_colors, arrows) -> Representation:
    """Like rep_of but without the acyclicity requirement (any functional graph)."""
    return _rep_from_graph(q, vertex_colors, arrows)


def _rep_from_graph(q, vertex_colors, arrows) -> Representation:
    local = []
    counts = [0] * q.num_vertices
    for c in vertex_colors:
        counts[c] += 1
        local.append(counts[c])
    images = [[0] * counts[s] for s, _ in q.arrows]
    for s, t, c in arrows:
        images[c][local[s] - 1] = local[t]
    maps = tuple(F1Map(counts[s], counts[t], tuple(images[a])) for a, (s, t) in enumerate(q.arrows))
    return Representation(q, tuple(counts), maps)


# -- canonical form ---------------------------------------------------------

def _components(n, arrows) -> list[list[int]]:
    adj = [[] for _ in range(n)]
    for s, t, _ in arrows:
        adj[s].append(t)
        adj[t].append(s)
    seen = [False] * n
    comps = []
    for r in range(n):
        if seen[r]:
            continue
        seen[r] = True
        comp = [r]
        stack = [r]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def _has_cycle(n, arrows) -> bool:
    succ = [[] for _ in range(n)]
    indeg = [0] * n
    for s, t, _ in arrows:
        succ[s].append(t)
        indeg[t] += 1
    stack = [x for x in range(n) if indeg[x] == 0]
    seen = 0
    while stack:
        x = stack.pop()
        seen += 1
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                stack.append(y)
    return seen < n


def graph_key(n: int, colors, arrows) -> CanonicalKey:
    """Canonical key of a colored graph in which every vertex has at most one
    arrow of each color in each direction.

    Each component is encoded by a breadth-first traversal in which the
    neighbours of a vertex are visited in (color, direction) order; since
    that order is unique, fixing the start vertex fixes the whole labelling.
    The minimal code over all admissible start vertices is kept.
    """
    nbrs = [[] for _ in range(n)]
    for s, t, c in arrows:
        nbrs[s].append((c + c, t))
        nbrs[t].append((c + c + 1, s))
    for row in nbrs:
        if len(row) > 1:
            row.sort()
            prev = -1
            for slot, _ in row:
                if slot == prev:
                    raise InadmissibleError("canonical_key needs at most one arrow per color and direction")
                prev = slot
    sig = [(colors[x], tuple(s for s, _ in nbrs[x])) for x in range(n)]
    comp_id = [-1] * n
    codes = []
    for r in range(n):
        if comp_id[r] >= 0:
            continue
        comp = [r]
        comp_id[r] = r
        i = 0
        while i < len(comp):
            for _, y in nbrs[comp[i]]:
                if comp_id[y] < 0:
                    comp_id[y] = r
                    comp.append(y)
            i += 1
        best_sig = min(sig[x] for x in comp)
        starts = [x for x in comp if sig[x] == best_sig]
        if len(starts) > 1:
            # one refinement round by neighbour signatures
            sig2 = {x: tuple((s, sig[y]) for s, y in nbrs[x]) for x in starts}
            m = min(sig2.values())
            starts = [x for x in starts if sig2[x] == m]
        best = _best_code(starts, colors, nbrs)
        codes.append("[" + ",".join(map(str, best)) + "]")
    codes.sort()
    return "".join(codes).encode()


def _best_code(starts, colors, nbrs) -> list[int]:
    best = None
    for s0 in starts:
        label = {s0: 0}
        order = [s0]
        code = []
        # state 0: equal to best so far, -1: already smaller
        state = 0 if best is not None else -1
        pos = 0
        i = 0
        aborted = False
        while i < len(order):
            x = order[i]
            i += 1
            row = nbrs[x]
            items = [colors[x], len(row)]
            for slot, y in row:
                ly = label.get(y)
                if ly is None:
                    ly = label[y] = len(order)
                    order.append(y)
                items.append(slot)
                items.append(ly)
            if state == 0:
                for e in items:
                    b = best[pos]
                    pos += 1
                    if e != b:
                        if e > b:
                            aborted = True
                        else:
                            state = -1
                        break
                if aborted:
                    break
            code.extend(items)
        if not aborted and (best is None or state == -1):
            best = code
    return best


def canonical_key(g: ColoredQuiver) -> CanonicalKey:
    return graph_key(g.num_vertices, g.vertex_colors, g.arrows)


def rep_key(v: Representation) -> CanonicalKey:
    """Isomorphism invariant of v, complete for all (also non-nilpotent) reps."""
    g = gamma_of(v)
    return graph_key(g.num_vertices, g.vertex_colors, g.arrows)


def component_keys(key: CanonicalKey) -> list[CanonicalKey]:
    """Split a key into the keys of its indecomposable summands."""
    text = key.decode()
    return [("[" + part + "]").encode() for part in text[1:-1].split("][")] if text else []


def join_keys(keys) -> CanonicalKey:
    return b"".join(sorted(keys))


def key_dim(key: CanonicalKey) -> int:
    """Total dimension read off a key: one [color, deg, slot, label, ...] record per element."""
    total = 0
    for part in component_keys(key):
        code = [int(x) for x in part[1:-1].split(b",")]
        i = 0
        while i < len(code):
            i += 2 + 2 * code[i + 1]
            total += 1
    return total


# -- homomorphisms via colored quivers --------------------------------------

def _reach_sets(n, arrows):
    succ = [[] for _ in range(n)]
    pred = [[] for _ in range(n)]
    for s, t, _ in arrows:
        succ[s].append(t)
        pred[t].append(s)
    return succ, pred


def _topological(n, succ):
    indeg = [0] * n
    for x in range(n):
        for y in succ[x]:
            indeg[y] += 1
    order = []
    stack = sorted((x for x in range(n) if indeg[x] == 0), reverse=True)
    while stack:
        x = stack.pop()
        order.append(x)
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                stack.append(y)
    return order


def upward_closed_sets(g: ColoredQuiver) -> list[frozenset[int]]:
    """Vertex sets closed under predecessors, by DFS in topological order."""
    n = g.num_vertices
    succ, pred = _reach_sets(n, g.arrows)
    order = _topological(n, succ)
    out = []

    def rec(i, chosen):
        if i == len(order):
            out.append(frozenset(chosen))
            return
        x = order[i]
        rec(i + 1, chosen)
        if all(p in chosen for p in pred[x]):
            chosen.add(x)
            rec(i + 1, chosen)
            chosen.discard(x)

    rec(0, set())
    return out


def chromatic_homs(v: Representation, w: Representation) -> int:
    """Number of bijective chromatic maps from upward-closed full subquivers of
    Gamma_v onto downward-closed full subquivers of Gamma_w."""
    if v.quiver != w.quiver:
        raise ValueError("representations of different quivers")
    if not (is_nilpotent_rep(v) and is_nilpotent_rep(w)):
        raise ValueError("chromatic_homs is only defined for nilpotent representations")
    gv, gw = gamma_of(v), gamma_of(w)
    nw = gw.num_vertices
    w_out = gw.out_map()
    w_in: list[dict[int, int]] = [dict() for _ in range(nw)]
    for s, t, c in gw.arrows:
        w_in[t][c] = s
    w_succ, _ = _reach_sets(nw, gw.arrows)
    total = 0
    for up in upward_closed_sets(gv):
        sub_arrows = [(s, t, c) for s, t, c in gv.arrows if s in up and t in up]
        verts = sorted(up)
        out_u = {x: {} for x in verts}
        in_u = {x: {} for x in verts}
        for s, t, c in sub_arrows:
            out_u[s][c] = t
            in_u[t][c] = s
        total += _count_isos_into(verts, gv.vertex_colors, out_u, in_u,
                                  gw.vertex_colors, w_out, w_in, w_succ)
    return total


def _count_isos_into(verts, vcol, out_u, in_u, wcol, w_out, w_in, w_succ) -> int:
    """Injective maps psi: verts -> Gamma_w that are isomorphisms onto a
    downward-closed full subquiver."""
    count = 0
    psi: dict[int, int] = {}
    used: set[int] = set()

    def consistent(x, y):
        for c, x2 in out_u[x].items():
            if x2 in psi and w_out[y].get(c) != psi[x2]:
                return False
        for c, x2 in in_u[x].items():
            if x2 in psi and w_in[y].get(c) != psi[x2]:
                return False
        # full subquiver: arrows among images must come from arrows in U
        for c, y2 in w_out[y].items():
            if y2 in used and out_u[x].get(c) is None:
                return False
            if y2 in used and psi.get(out_u[x][c]) != y2:
                return False
        for c, y2 in w_in[y].items():
            if y2 in used and in_u[x].get(c) is None:
                return False
            if y2 in used and psi.get(in_u[x][c]) != y2:
                return False
        return True

    def rec(i):
        nonlocal count
        if i == len(verts):
            image = set(psi.values())
            if all(z in image for y in image for z in w_succ[y]):
                count += 1
            return
        x = verts[i]
        for y in range(len(wcol)):
            if y in used or wcol[y] != vcol[x]:
                continue
            if not consistent(x, y):
                continue
            psi[x] = y
            used.add(y)
            rec(i + 1)
            del psi[x]
            used.discard(y)

    rec(0)
    return count


def hom_count_bruteforce(v: Representation, w: Representation) -> int:
    return len(hom_set(v, w))


# -- DOT export -------------------------------------------------------------

# arrow color i is drawn as STYLES[i % len(STYLES)]; the first two match the
# dotted-blue / red convention of the hand-drawn figures
STYLES = [("blue", "dotted"), ("red", "solid"), ("darkgreen", "dashed"), ("black", "solid"),
          ("orange", "dotted"), ("purple", "dashed"), ("brown", "solid"), ("gray", "dotted")]


def gamma_to_dot(g: ColoredQuiver, name: str = "Gamma") -> str:
    lines = [f"digraph {name} {{", "  node [shape=circle];"]
    for x, c in enumerate(g.vertex_colors):
        label = g.labels[x][1] if g.labels else x + 1
        lines.append(f'  n{x} [label="{label}", qcolor={c}];')
    for s, t, c in sorted(g.arrows):
        color, style = STYLES[c % len(STYLES)]
        lines.append(f'  n{s} -> n{t} [acolor={c}, color={color}, style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def bfs_layers(g: ColoredQuiver) -> list[int]:
    """Longest-path depth of each vertex (useful for drawing top-down)."""
    succ, _ = _reach_sets(g.num_vertices, g.arrows)
    depth = [0] * g.num_vertices
    for x in _topological(g.num_vertices, succ):
        for y in succ[x]:
            depth[y] = max(depth[y], depth[x] + 1)
    return depth


def maximal_paths(g: ColoredQuiver, color: int) -> list[list[int]]:
    """Maximal color-monochromatic paths, each listed source first."""
    out_c = {}
    in_c = set()
    for s, t, c in g.arrows:
        if c == color:
            out_c[s] = t
            in_c.add(t)
    paths = []
    for x in range(g.num_vertices):
        if x in in_c:
            continue
        path = [x]
        while path[-1] in out_c:
            path.append(out_c[path[-1]])
        paths.append(path)
    return paths


__all__ = [
    "CanonicalKey", "ColoredQuiver", "InadmissibleError", "gamma_of", "check_admissible",
    "admissibility_violations", "rep_of", "canonical_key", "rep_key", "chromatic_homs",
    "upward_closed_sets", "gamma_to_dot", "maximal_paths", "graph_key", "rep_from_graph",
    "component_keys", "join_keys", "key_dim", "hom_count_bruteforce", "bfs_layers",
]
