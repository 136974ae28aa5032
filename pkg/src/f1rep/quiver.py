"""
Finite quivers, their underlying graphs and the shape classification
(tree / cycle / proper pseudotree / other) used for representation type.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum


@dataclass(frozen=True)
class Quiver:
    num_vertices: int
    arrows: tuple[tuple[int, int], ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        arrows = tuple((int(s), int(t)) for s, t in self.arrows)
        object.__setattr__(self, "arrows", arrows)
        if self.num_vertices < 1:
            raise ValueError("a quiver needs at least one vertex")
        for s, t in arrows:
            if not (0 <= s < self.num_vertices and 0 <= t < self.num_vertices):
                raise ValueError(f"arrow ({s},{t}) has an endpoint outside the vertex set")

    def __repr__(self):
        if self.name:
            return f"Quiver({self.name})"
        return f"Quiver({self.num_vertices}, {list(self.arrows)})"

    @property
    def num_arrows(self) -> int:
        return len(self.arrows)

    def source(self, a: int) -> int:
        return self.arrows[a][0]

    def target(self, a: int) -> int:
        return self.arrows[a][1]

    def out_arrows(self, v: int) -> list[int]:
        return [a for a, (s, _) in enumerate(self.arrows) if s == v]

    def in_arrows(self, v: int) -> list[int]:
        return [a for a, (_, t) in enumerate(self.arrows) if t == v]

    def is_loop_quiver(self) -> bool:
        return self.num_vertices == 1

    def has_oriented_cycle(self) -> bool:
        indeg = [0] * self.num_vertices
        for _, t in self.arrows:
            indeg[t] += 1
        queue = deque(v for v in range(self.num_vertices) if indeg[v] == 0)
        seen = 0
        while queue:
            v = queue.popleft()
            seen += 1
            for a in self.out_arrows(v):
                t = self.target(a)
                indeg[t] -= 1
                if indeg[t] == 0:
                    queue.append(t)
        return seen < self.num_vertices

    def to_json(self) -> dict:
        return {"vertices": self.num_vertices, "arrows": [list(a) for a in self.arrows]}

    @classmethod
    def from_json(cls, data: dict) -> "Quiver":
        return cls(int(data["vertices"]), tuple(tuple(a) for a in data["arrows"]))

    def to_dot(self) -> str:
        lines = ["digraph Q {"]
        for v in range(self.num_vertices):
            lines.append(f'  v{v} [label="{v}"];')
        for a, (s, t) in enumerate(self.arrows):
            lines.append(f'  v{s} -> v{t} [label="a{a}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Subquiver:
    vertices: frozenset[int]
    arrows: frozenset[int]


class Tag(Enum):
    TREE = "Tree"
    CYCLE = "Cycle"
    PROPER_PSEUDOTREE = "ProperPseudotree"
    OTHER = "Other"


@dataclass(frozen=True)
class QuiverShape:
    tag: Tag
    cycle_rank: int


# -- constructors -----------------------------------------------------------

def loop_quiver(n: int) -> Quiver:
    """L_n: one vertex with n loops."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return Quiver(1, ((0, 0),) * n, name=f"L{n}")


def cycle_quiver(orientation) -> Quiver:
    """Cycle on vertices 0..l-1; arrow j joins j and j+1 (mod l).

    ``orientation[j]`` is True when arrow j points j -> j+1.
    """
    orientation = [bool(x) for x in orientation]
    ell = len(orientation)
    if ell == 0:
        raise ValueError("cycle quiver needs a non-empty orientation word")
    arrows = []
    for j, fwd in enumerate(orientation):
        k = (j + 1) % ell
        arrows.append((j, k) if fwd else (k, j))
    word = "".join("+" if x else "-" for x in orientation)
    return Quiver(ell, tuple(arrows), name=f"C{ell}:{word}")


def path_quiver(n: int) -> Quiver:
    """Equioriented A_n: 0 -> 1 -> ... -> n-1."""
    return Quiver(n, tuple((i, i + 1) for i in range(n - 1)), name=f"A{n}")


def kronecker_quiver() -> Quiver:
    return Quiver(2, ((0, 1), (0, 1)), name="K2")


def star_quiver(orientation=(True, True, True)) -> Quiver:
    """Centre 0 with leaves 1..k; True means the arrow points into the centre."""
    arrows = tuple((i + 1, 0) if inward else (0, i + 1) for i, inward in enumerate(orientation))
    return Quiver(len(orientation) + 1, arrows, name="star")


def cycle_with_pendant(orientation, pendant_out: bool = True) -> Quiver:
    """Cycle quiver plus one extra vertex hung off vertex 0."""
    c = cycle_quiver(orientation)
    p = c.num_vertices
    extra = (0, p) if pendant_out else (p, 0)
    return Quiver(p + 1, c.arrows + (extra,), name=f"{c.name}+pendant")


# -- underlying graph -------------------------------------------------------

def components(q: Quiver) -> list[list[int]]:
    """Connected components of the underlying graph, each sorted."""
    parent = list(range(q.num_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s, t in q.arrows:
        rs, rt = find(s), find(t)
        if rs != rt:
            parent[max(rs, rt)] = min(rs, rt)
    groups: dict[int, list[int]] = {}
    for v in range(q.num_vertices):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def is_connected(q: Quiver) -> bool:
    return len(components(q)) == 1


def cycle_rank(q: Quiver) -> int:
    """dim H_1 of the underlying multigraph over Z/2."""
    return q.num_arrows - q.num_vertices + len(components(q))


def _degrees(q: Quiver) -> list[int]:
    deg = [0] * q.num_vertices
    for s, t in q.arrows:
        deg[s] += 1
        deg[t] += 1
    return deg


def classify(q: Quiver) -> QuiverShape:
    if not is_connected(q):
        raise ValueError("classification requires connected quiver")
    r = cycle_rank(q)
    if r == 0:
        tag = Tag.TREE
    elif r == 1:
        tag = Tag.CYCLE if all(d == 2 for d in _degrees(q)) else Tag.PROPER_PSEUDOTREE
    else:
        tag = Tag.OTHER
    return QuiverShape(tag, r)


def spanning_tree(q: Quiver) -> list[int]:
    """Arrow ids of the BFS spanning forest, roots taken in vertex order."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(q.num_vertices)]
    for a, (s, t) in enumerate(q.arrows):
        if s != t:
            adj[s].append((a, t))
            adj[t].append((a, s))
    seen = [False] * q.num_vertices
    tree = []
    for root in range(q.num_vertices):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for a, w in sorted(adj[v]):
                if not seen[w]:
                    seen[w] = True
                    tree.append(a)
                    queue.append(w)
    return sorted(tree)


def tree_path(q: Quiver, tree: list[int], u: int, v: int) -> list[int]:
    """Arrow ids on the unique path from u to v inside the forest ``tree``."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for a in tree:
        s, t = q.arrows[a]
        adj.setdefault(s, []).append((a, t))
        adj.setdefault(t, []).append((a, s))
    prev: dict[int, tuple[int, int] | None] = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for a, y in sorted(adj.get(x, [])):
            if y not in prev:
                prev[y] = (a, x)
                queue.append(y)
    if v not in prev:
        raise ValueError(f"{u} and {v} are not joined in the forest")
    path = []
    x = v
    while prev[x] is not None:
        a, x = prev[x]
        path.append(a)
    return path[::-1]


def fundamental_cycle(q: Quiver, tree: list[int], a: int) -> Subquiver:
    s, t = q.arrows[a]
    arrows = [a] + tree_path(q, tree, s, t)
    verts = {s, t}
    for b in arrows:
        verts.update(q.arrows[b])
    return Subquiver(frozenset(verts), frozenset(arrows))


def fundamental_cycle_pair(q: Quiver):
    """Two fundamental cycles C_a, C_b and a tree path w joining them.

    Returns ``(C_a, C_b, w, a, b)`` where a, b are the non-tree arrows that
    distinguish the cycles, or None when the cycle rank is below 2.
    """
    if not is_connected(q):
        raise ValueError("fundamental_cycle_pair requires a connected quiver")
    if cycle_rank(q) < 2:
        return None
    tree = spanning_tree(q)
    extra = [a for a in range(q.num_arrows) if a not in set(tree)]
    a, b = extra[0], extra[1]
    ca = fundamental_cycle(q, tree, a)
    cb = fundamental_cycle(q, tree, b)
    # shortest tree path between the two vertex sets
    best = None
    for u in sorted(ca.vertices):
        for v in sorted(cb.vertices):
            p = tree_path(q, tree, u, v)
            if best is None or len(p) < len(best[0]):
                best = (p, u, v)
    path, u, v = best
    wverts = {u, v}
    for c in path:
        wverts.update(q.arrows[c])
    w = Subquiver(frozenset(wverts), frozenset(path))
    return ca, cb, w, a, b


def cycle_structure(q: Quiver, start: int | None = None):
    """Cyclic ordering of the unique cycle of a quiver of cycle rank 1.

    Returns ``(vertices, arrows)`` with arrows[j] joining vertices[j] and
    vertices[(j+1) % l].  The pendant trees are ignored.
    """
    if not is_connected(q) or cycle_rank(q) != 1:
        raise ValueError("cycle_structure needs a connected quiver of cycle rank 1")
    # prune leaves until only the cycle remains
    alive_v = set(range(q.num_vertices))
    alive_a = set(range(q.num_arrows))
    changed = True
    while changed:
        changed = False
        for v in sorted(alive_v):
            inc = [a for a in alive_a if v in q.arrows[a]]
            deg = sum(2 if q.arrows[a][0] == q.arrows[a][1] else 1 for a in inc)
            if deg <= 1:
                alive_v.discard(v)
                alive_a.difference_update(inc)
                changed = True
    if start is None:
        start = min(alive_v)
    if start not in alive_v:
        raise ValueError(f"vertex {start} is not on the cycle")
    verts = [start]
    arrows = []
    used: set[int] = set()
    v = start
    while True:
        choices = sorted(a for a in alive_a if a not in used and v in q.arrows[a])
        if not choices:
            break
        a = choices[0]
        used.add(a)
        s, t = q.arrows[a]
        w = t if s == v else s
        arrows.append(a)
        if w == start:
            break
        verts.append(w)
        v = w
    return verts, arrows


def pendant_arrows(q: Quiver, cycle_vertices) -> list[tuple[int, int]]:
    """(cycle vertex, arrow) pairs for arrows leaving the cycle."""
    cyc = set(cycle_vertices)
    _, carrows = cycle_structure(q, min(cyc))
    out = []
    for a, (s, t) in enumerate(q.arrows):
        if a in carrows:
            continue
        if s in cyc:
            out.append((s, a))
        elif t in cyc:
            out.append((t, a))
    return out


# -- named quivers ----------------------------------------------------------

def named_quiver(name: str) -> Quiver:
    """Resolve names such as L2, A3, C3:++-, K2, PT1."""
    name = name.strip()
    if name.startswith("L") and name[1:].isdigit():
        return loop_quiver(int(name[1:]))
    if name.startswith("A") and name[1:].isdigit():
        return path_quiver(int(name[1:]))
    if name.startswith("C"):
        body, _, word = name[1:].partition(":")
        ell = int(body)
        if not word:
            word = "+" * ell
        if len(word) != ell or set(word) - {"+", "-"}:
            raise ValueError(f"bad orientation word in {name!r}")
        return cycle_quiver([ch == "+" for ch in word])
    if name == "K2":
        return kronecker_quiver()
    if name == "PT1":
        return Quiver(4, ((0, 1), (1, 2), (2, 0), (0, 3)), name="PT1")
    if name == "PT2":
        return Quiver(3, ((0, 1), (1, 0), (0, 2)), name="PT2")
    if name == "STAR3":
        return star_quiver()
    raise ValueError(f"unknown quiver name {name!r}")
