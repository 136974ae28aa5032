"""
Quiver monoids, their modules, and skew shapes.

A representation V of Q gives a left module over the quiver monoid M_Q on
the pointed set of all elements of V: e_i projects onto the block of vertex
i and an arrow acts by its map.  For L_n with commuting maps the modules
that admit a Z^n grading are exactly the ones coming from skew shapes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .colored import gamma_of, rep_key
from .f1lin import F1Map, enumerate_maps
from .quiver import Quiver, loop_quiver
from .rep import Representation, compose_paths, is_indecomposable, is_nilpotent_rep

# -- the quiver monoid ------------------------------------------------------


@dataclass(frozen=True)
class MonoidElement:
    """Normal form: kind is 'zero', 'one', 'idem' (data = vertex) or 'path'
    (data = arrows in the order they are traversed)."""
    kind: str
    data: object = None

    def __repr__(self):
        if self.kind == "zero":
            return "0"
        if self.kind == "one":
            return "1"
        if self.kind == "idem":
            return f"e{self.data}"
        return "*".join(f"a{a}" for a in reversed(self.data))


ZERO = MonoidElement("zero")
ONE = MonoidElement("one")


def idempotent(i: int) -> MonoidElement:
    return MonoidElement("idem", i)


def path(*arrows: int) -> MonoidElement:
    """Path traversing ``arrows`` in the given order (first arrow applied first)."""
    if not arrows:
        raise ValueError("use ONE or idempotent() for trivial paths")
    return MonoidElement("path", tuple(arrows))


def _path_valid(p, q: Quiver) -> bool:
    return all(q.arrows[a][1] == q.arrows[b][0] for a, b in zip(p, p[1:]))


def mq_multiply(a: MonoidElement, b: MonoidElement, q: Quiver) -> MonoidElement:
    """a * b, meaning b acts first."""
    for x in (a, b):
        if x.kind == "path" and not _path_valid(x.data, q):
            raise ValueError(f"{x!r} is not a path of the quiver")
    if a.kind == "zero" or b.kind == "zero":
        return ZERO
    if a.kind == "one":
        return b
    if b.kind == "one":
        return a
    if a.kind == "idem" and b.kind == "idem":
        return a if a.data == b.data else ZERO
    if a.kind == "idem":
        return b if q.arrows[b.data[-1]][1] == a.data else ZERO
    if b.kind == "idem":
        return a if q.arrows[a.data[0]][0] == b.data else ZERO
    if q.arrows[b.data[-1]][1] != q.arrows[a.data[0]][0]:
        return ZERO
    return MonoidElement("path", b.data + a.data)


def words(q: Quiver, max_len: int) -> list[MonoidElement]:
    """Nonzero normal forms: 1, the idempotents and paths of length <= max_len."""
    out = [ONE] + [idempotent(i) for i in range(q.num_vertices)]
    layer = [(a,) for a in range(q.num_arrows)]
    for _ in range(max_len):
        out += [MonoidElement("path", p) for p in layer]
        layer = [p + (b,) for p in layer for b in range(q.num_arrows) if q.arrows[p[-1]][1] == q.arrows[b][0]]
    return out


# -- modules ----------------------------------------------------------------

Action = tuple  # image of 1..d, entries in 0..d (repetitions allowed)


def _compose(g: Action, f: Action) -> Action:
    """g after f."""
    return tuple(g[j - 1] if j else 0 for j in f)


@dataclass(frozen=True)
class MQModule:
    """A finite pointed set [dim] with actions of the generators of M_Q.

    ``idems[i]`` and ``arrows[a]`` are pointed self-maps given by image tuples.
    """
    quiver: Quiver
    dim: int
    idems: tuple[Action, ...]
    arrows: tuple[Action, ...]

    def act(self, x: MonoidElement) -> Action:
        if x.kind == "zero":
            return (0,) * self.dim
        if x.kind == "one":
            return tuple(range(1, self.dim + 1))
        if x.kind == "idem":
            return self.idems[x.data]
        out = tuple(range(1, self.dim + 1))
        for a in x.data:
            out = _compose(self.arrows[a], out)
        return out

    def generators(self) -> list[Action]:
        return list(self.idems) + list(self.arrows)


def respects_relations(m: MQModule) -> bool:
    q = m.quiver
    for i, e in enumerate(m.idems):
        if _compose(e, e) != e:
            return False
        for j, f in enumerate(m.idems):
            if i != j and any(_compose(e, f)):
                return False
    for a, (s, t) in enumerate(q.arrows):
        f = m.arrows[a]
        if _compose(m.idems[t], f) != f or _compose(f, m.idems[s]) != f:
            return False
    return True


def rep_to_module(v: Representation) -> MQModule:
    """Carrier = blocks of V in vertex order; e_i projects, arrows act blockwise."""
    q = v.quiver
    offsets = [0]
    for d in v.dims:
        offsets.append(offsets[-1] + d)
    total = offsets[-1]
    idems = []
    for i in range(q.num_vertices):
        idems.append(tuple(x if offsets[i] < x <= offsets[i + 1] else 0 for x in range(1, total + 1)))
    arrows = []
    for a, (s, t) in enumerate(q.arrows):
        img = [0] * total
        for k in range(1, v.dims[s] + 1):
            j = v.maps[a](k)
            img[offsets[s] + k - 1] = offsets[t] + j if j else 0
        arrows.append(tuple(img))
    return MQModule(q, total, tuple(idems), tuple(arrows))


def module_to_rep(m: MQModule) -> Representation:
    """Inverse of rep_to_module on type-alpha modules."""
    q = m.quiver
    blocks = [[x for x in range(1, m.dim + 1) if e[x - 1] == x] for e in m.idems]
    local = {}
    for block in blocks:
        for i, x in enumerate(block, 1):
            local[x] = i
    maps = []
    for a, (s, t) in enumerate(q.arrows):
        img = tuple(local[m.arrows[a][x - 1]] if m.arrows[a][x - 1] else 0 for x in blocks[s])
        maps.append(F1Map(len(blocks[s]), len(blocks[t]), img))
    return Representation(q, tuple(len(b) for b in blocks), tuple(maps))


def generated_actions(m: MQModule) -> set[Action]:
    """All maps by which elements of M_Q act (closure of the generators)."""
    ident = tuple(range(1, m.dim + 1))
    seen = {ident}
    frontier = [ident]
    gens = m.generators()
    while frontier:
        nxt = []
        for f in frontier:
            for g in gens:
                h = _compose(g, f)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def _injective_off_zero(f: Action) -> bool:
    nz = [j for j in f if j]
    return len(nz) == len(set(nz))


def is_type_alpha(m: MQModule) -> bool:
    """Every monoid element acts injectively away from the preimage of 0."""
    return all(_injective_off_zero(f) for f in generated_actions(m))


def module_homs(m: MQModule, n: MQModule) -> list[F1Map]:
    """F1-linear maps commuting with every generator."""
    out = []
    pairs = list(zip(m.generators(), n.generators()))
    for f in enumerate_maps(m.dim, n.dim):
        if all(tuple(f(x) for x in gm) == tuple(gn[j - 1] if j else 0 for j in f.image)
               for gm, gn in pairs):
            out.append(f)
    return out


# -- commuting representations and gradings ---------------------------------

class ShapeError(ValueError):
    """A representation does not come from a skew shape."""


class NonCommutingError(ShapeError):
    pass


class DecomposableError(ShapeError):
    pass


class NoGradingError(ShapeError):
    pass


def maps_commute(v: Representation) -> bool:
    q = v.quiver
    if not q.is_loop_quiver():
        raise ValueError("commutativity is checked for loop quivers")
    for i in range(q.num_arrows):
        for j in range(i + 1, q.num_arrows):
            if compose_paths(v, (i, j)) != compose_paths(v, (j, i)):
                return False
    return True


def find_grading(v: Representation):
    """(sigma, degrees) with deg(f_i(a)) = deg(a) + e_sigma(i), or None."""
    q = v.quiver
    n = q.num_arrows
    g = gamma_of(v)
    adj = [[] for _ in range(g.num_vertices)]
    for s, t, c in g.arrows:
        adj[s].append((t, c, 1))
        adj[t].append((s, c, -1))
    for sigma in permutations(range(n)):
        deg: dict[int, tuple] = {}
        ok = True
        for r in range(g.num_vertices):
            if r in deg:
                continue
            deg[r] = (0,) * n
            stack = [r]
            while stack and ok:
                x = stack.pop()
                for y, c, sign in adj[x]:
                    want = list(deg[x])
                    want[sigma[c]] += sign
                    want = tuple(want)
                    if y not in deg:
                        deg[y] = want
                        stack.append(y)
                    elif deg[y] != want:
                        ok = False
                        break
            if not ok:
                break
        if ok:
            return sigma, {g.labels[x][1]: deg[x] for x in deg}
    return None


def admits_grading(v: Representation):
    found = find_grading(v)
    return None if found is None else found[1]


# -- skew shapes ------------------------------------------------------------

def _normalize(cells) -> frozenset:
    cells = [tuple(c) for c in cells]
    if not cells:
        return frozenset()
    n = len(cells[0])
    low = [min(c[i] for c in cells) for i in range(n)]
    return frozenset(tuple(c[i] - low[i] for i in range(n)) for c in cells)


@dataclass(frozen=True)
class SkewShape:
    n: int
    cells: frozenset

    def __post_init__(self):
        cells = _normalize(self.cells)
        if any(len(c) != self.n for c in cells):
            raise ValueError("cell of the wrong dimension")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def of(cls, cells) -> "SkewShape":
        cells = [tuple(c) for c in cells]
        return cls(len(cells[0]) if cells else 0, frozenset(cells))

    def __len__(self):
        return len(self.cells)

    def sorted_cells(self) -> list[tuple]:
        return sorted(self.cells)

    def to_json(self) -> dict:
        return {"n": self.n, "cells": [list(c) for c in self.sorted_cells()]}

    @classmethod
    def from_json(cls, data) -> "SkewShape":
        return cls(int(data["n"]), frozenset(tuple(c) for c in data["cells"]))

    def ascii(self) -> str:
        if self.n != 2:
            raise ValueError("ASCII rendering is for shapes in Z^2")
        if not self.cells:
            return ""
        w = max(c[0] for c in self.cells) + 1
        h = max(c[1] for c in self.cells) + 1
        rows = []
        for y in range(h - 1, -1, -1):
            rows.append("".join("#" if (x, y) in self.cells else "." for x in range(w)))
        return "\n".join(rows)


def _leq(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _box(a, b):
    ranges = [range(x, y + 1) for x, y in zip(a, b)]
    out = [()]
    for r in ranges:
        out = [p + (v,) for p in out for v in r]
    return out


def is_valid_shape(s: SkewShape) -> bool:
    """Convexity: every cell between two comparable cells is present."""
    cells = s.cells
    for a in cells:
        for b in cells:
            if a != b and _leq(a, b):
                if any(c not in cells for c in _box(a, b)):
                    return False
    return True


def _unit_neighbours(c):
    for i in range(len(c)):
        for d in (-1, 1):
            yield c[:i] + (c[i] + d,) + c[i + 1:]


def is_connected_shape(s: SkewShape) -> bool:
    cells = s.cells
    if not cells:
        return False
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        c = stack.pop()
        for d in _unit_neighbours(c):
            if d in cells and d not in seen:
                seen.add(d)
                stack.append(d)
    return len(seen) == len(cells)


def shape_to_rep(s: SkewShape) -> Representation:
    """L_n representation on the cells: f_i(a) = a + e_i when that is a cell."""
    if not is_valid_shape(s):
        raise ValueError("not a convex shape")
    cells = s.sorted_cells()
    index = {c: k for k, c in enumerate(cells, 1)}
    maps = []
    for i in range(s.n):
        img = []
        for c in cells:
            d = c[:i] + (c[i] + 1,) + c[i + 1:]
            img.append(index.get(d, 0))
        maps.append(F1Map(len(cells), len(cells), tuple(img)))
    return Representation(loop_quiver(s.n), (len(cells),), tuple(maps))


def rep_to_shape(v: Representation) -> SkewShape:
    if not maps_commute(v):
        raise NonCommutingError("maps do not commute")
    if not is_indecomposable(v):
        raise DecomposableError("representation is decomposable")
    found = find_grading(v)
    if found is None:
        raise NoGradingError("no consistent Z^n grading")
    sigma, deg = found
    # undo sigma so that f_i moves along e_i
    cells = [tuple(d[sigma[i]] for i in range(len(sigma))) for d in deg.values()]
    if len(set(cells)) != len(cells):
        raise ShapeError("grading is not injective")
    shape = SkewShape(v.quiver.num_arrows, frozenset(cells))
    if not is_valid_shape(shape) or rep_key(shape_to_rep(shape)) != rep_key(v):
        raise ShapeError("graded representation does not match its shape")
    return shape


def is_shape_class(v: Representation) -> bool:
    """Indecomposable, nilpotent, commuting and graded."""
    return (is_nilpotent_rep(v) and is_indecomposable(v) and maps_commute(v)
            and find_grading(v) is not None)


def enumerate_shapes(n: int, cells: int) -> list[SkewShape]:
    """Connected skew shapes in Z^n with the given number of cells, up to translation."""
    if cells <= 0:
        return []
    level = {_normalize([(0,) * n])}
    for _ in range(cells - 1):
        nxt = set()
        for shape in level:
            for c in shape:
                for d in _unit_neighbours(c):
                    if d not in shape:
                        nxt.add(_normalize(shape | {d}))
        level = nxt
    out = [SkewShape(n, s) for s in level]
    out = [s for s in out if is_valid_shape(s)]
    return sorted(out, key=lambda s: s.sorted_cells())


# -- the extension counterexample -------------------------------------------

def extension_counterexample():
    """(R, M, N) at L2: the string 1 -f1-> 2 -f2-> 3 -f1-> 4 with sub N = {3,4}."""
    q = loop_quiver(2)
    r = Representation(q, (4,), (F1Map(4, 4, (2, 0, 4, 0)), F1Map(4, 4, (0, 3, 0, 0))))
    dom = Representation(q, (2,), (F1Map(2, 2, (2, 0)), F1Map(2, 2, (0, 0))))
    return r, dom, dom


__all__ = [
    "MonoidElement", "ZERO", "ONE", "idempotent", "path", "mq_multiply", "words", "MQModule",
    "respects_relations", "rep_to_module", "module_to_rep", "generated_actions", "is_type_alpha",
    "module_homs", "ShapeError", "NonCommutingError", "DecomposableError", "NoGradingError",
    "maps_commute", "find_grading", "admits_grading", "SkewShape", "is_valid_shape",
    "is_connected_shape", "shape_to_rep", "rep_to_shape", "is_shape_class", "enumerate_shapes",
    "extension_counterexample",
]
