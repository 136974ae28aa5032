"""
Named verification suites behind ``f1rep verify``.

Each suite returns a list of Check records; a suite passes when every check
does.  Growth-order statements are asymptotic, so the suites touching them
only test finite prefixes and say so in their notes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .colored import (chromatic_homs, check_admissible, gamma_of, rep_key)
from .corr import (NonCommutingError, enumerate_shapes, extension_counterexample, find_grading,
                   maps_commute, rep_to_shape, shape_to_rep)
from .enumeration import (brute_force_classes, brute_force_indecomposables, connected_graphs,
                          cycle_family_keys, embed_loops, f_reduce_parts, indecomposables,
                          ni, nil_leq_check, nilpotent_class_count, pseudotree_family)
from .hall import (HallAlgebra, check_associativity, check_bialgebra, check_coassociativity,
                   check_cocommutativity, check_consistency, check_grading, check_primitives,
                   check_twist_invariance, ses_count)
from .quiver import (Quiver, cycle_quiver, kronecker_quiver, loop_quiver, named_quiver,
                     path_quiver, star_quiver)
from .rep import direct_sum_rep, hom_set, is_indecomposable, is_nilpotent_rep

NIL_DISCLAIMER = ("note: the growth preorder is asymptotic; only finite prefixes "
                  "NI_Q(n) <= D NI_Q'(Cn), n <= n_max, are checked here")


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, passed, detail=""):
        self.checks.append(Check(name, bool(passed), str(detail)))

    def to_json(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "notes": self.notes,
                "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks]}


def tree_quivers() -> list[Quiver]:
    """Every orientation of A2 and A3, and of the star with three leaves."""
    out = [Quiver(2, ((0, 1),), name="A2:+"), Quiver(2, ((1, 0),), name="A2:-")]
    for o1 in (True, False):
        for o2 in (True, False):
            arrows = ((0, 1) if o1 else (1, 0), (1, 2) if o2 else (2, 1))
            out.append(Quiver(3, arrows, name=f"A3:{'+-'[not o1]}{'+-'[not o2]}"))
    for bits in range(8):
        inward = tuple(bool(bits >> i & 1) for i in range(3))
        q = star_quiver(inward)
        out.append(Quiver(q.num_vertices, q.arrows, name="STAR3:" + "".join("io"[not x] for x in inward)))
    return out


def suite_l1_growth(n_max: int = 8) -> Report:
    rep = Report("l1-growth")
    q = loop_quiver(1)
    values = [ni(q, n) for n in range(1, n_max + 1)]
    rep.add(f"NI_L1(n) = 1 for n <= {n_max}", all(v == 1 for v in values), values)
    return rep


def suite_finite_type(n_max: int = 8) -> Report:
    rep = Report("finite-type-trees")
    for q in tree_quivers():
        values = [ni(q, n) for n in range(1, n_max + 1)]
        tail = values[q.num_vertices:]
        rep.add(f"{q.name}: NI = 0 beyond dim {q.num_vertices}", all(v == 0 for v in tail), values)
    for word in ("++", "+++"):
        q = cycle_quiver([True] * len(word))
        values = [ni(q, n) for n in range(1, n_max + 1)]
        rep.add(f"{q.name}: NI >= 1 up to {n_max}", all(v >= 1 for v in values), values)
    return rep


def classification_quivers() -> list[Quiver]:
    return [cycle_quiver([True, True]), cycle_quiver([True, False]), cycle_quiver([False, True]),
            cycle_quiver([True, True, True]), cycle_quiver([True, False, True])]


def suite_cycle_classification(n_max: int = 6) -> Report:
    rep = Report("cycle-classification")
    for c in classification_quivers():
        ok = True
        bound = True
        detail = []
        for n in range(1, n_max + 1):
            found = set(brute_force_indecomposables(c, n))
            ok &= found == cycle_family_keys(c, n)
            bound &= len(found) <= 2 * c.num_vertices
            detail.append(len(found))
        rep.add(f"{c.name}: indecomposables = I and I~ families, n <= {n_max}", ok, detail)
        rep.add(f"{c.name}: NI <= 2|C0|", bound, detail)
    return rep


def suite_ses_counterexample() -> Report:
    rep = Report("ses-counterexample")
    r, m, n = extension_counterexample()
    p = ses_count(r, m, n)
    rep.add("short exact sequence exists", p >= 1, f"P = {p}")
    rep.add("end terms commute", maps_commute(m) and maps_commute(n))
    try:
        rep_to_shape(r)
        rep.add("middle term fails commutativity", False, "shape found")
    except NonCommutingError as e:
        rep.add("middle term fails commutativity", True, str(e))
    return rep


def suite_hall(q: Quiver, dim_cap: int) -> Report:
    rep = Report(f"hall[{q.name},{dim_cap}]")
    alg = HallAlgebra(q, dim_cap)
    rep.notes.append(f"{len(alg.keys())} nilpotent classes up to dimension {dim_cap}")
    rep.add("a * a_M * a_N = P", not check_consistency(alg))
    rep.add("associativity", not check_associativity(alg))
    rep.add("coassociativity", not check_coassociativity(alg))
    rep.add("cocommutativity", not check_cocommutativity(alg))
    rep.add("bialgebra compatibility", not check_bialgebra(alg))
    rep.add("grading", not check_grading(alg))
    rep.add("primitives are the indecomposables", not check_primitives(alg))
    if q.is_loop_quiver() and q.num_arrows == 2:
        rep.add("swap invariance of structure constants", not check_twist_invariance(alg, (1, 0)))
    return rep


def suite_n_to_n_minus_1(d_max: int = 4) -> Report:
    rep = Report("n-to-n-1")
    l1, l2, l3 = loop_quiver(1), loop_quiver(2), loop_quiver(3)
    for d in range(1, d_max + 1):
        gen = ni(l2, d)
        brute = len(brute_force_indecomposables(l2, d))
        rep.add(f"NI_L2({d}) by brute force = by colored quivers", gen == brute, f"{brute} vs {gen}")
    for small, big in ((l1, l2), (l2, l3)):
        for d in range(1, d_max + 1):
            a, b, c = ni(small, d), ni(big, d), ni(small, 2 * d)
            rep.add(f"NI_{small.name}({d}) <= NI_{big.name}({d})", a <= b, f"{a} <= {b}")
            rep.add(f"NI_{big.name}({d}) <= NI_{small.name}({2 * d})", b <= c, f"{b} <= {c}")
    return rep


def check_f_reduce(n_loops: int, d_max: int = 3) -> list[Check]:
    q = loop_quiver(n_loops)
    out = []
    images = {}
    doubles = indec = ses = True
    for d in range(1, d_max + 1):
        for k, m in indecomposables(q, d).items():
            fm, top, bottom = f_reduce_parts(m)
            doubles &= fm.dim == 2 * m.dim
            indec &= is_indecomposable(fm)
            images.setdefault(rep_key(fm), []).append(k)
            split = rep_key(direct_sum_rep(top, bottom))
            ses &= ses_count(fm, top, bottom) > 0 and split != rep_key(fm)
    collisions = sum(len(v) - 1 for v in images.values())
    name = q.name
    out.append(Check(f"F on {name}: injective on keys", collisions == 0, f"{collisions} collisions"))
    out.append(Check(f"F on {name}: doubles dimension", doubles))
    out.append(Check(f"F on {name}: preserves indecomposability", indec))
    out.append(Check(f"F on {name}: non-split gluing sequence", ses))
    return out


def suite_f_reduce(d_max: int = 3) -> Report:
    rep = Report("f-reduce")
    for n in (2, 3):
        rep.checks.extend(check_f_reduce(n, d_max))
    return rep


def suite_upper_bound(d_max: int = 3) -> Report:
    rep = Report("upper-bound")
    for q in (path_quiver(2), kronecker_quiver()):
        images = {}
        doubles = indec = True
        for d in range(1, d_max + 1):
            for k, m in brute_force_classes(q, d).items():
                e = embed_loops(m)
                doubles &= e.dim == 2 * m.dim
                indec &= is_indecomposable(e) == is_indecomposable(m)
                images.setdefault(rep_key(e), []).append(k)
        collisions = sum(len(v) - 1 for v in images.values())
        rep.add(f"{q.name}: injective on keys", collisions == 0, f"{len(images)} classes")
        rep.add(f"{q.name}: doubles dimension", doubles)
        rep.add(f"{q.name}: indecomposable iff image is", indec)
    return rep


def suite_skew(c_max: int = 5, d_max: int = 8) -> Report:
    rep = Report("skew")
    q = loop_quiver(2)
    for c in range(1, c_max + 1):
        shapes = enumerate_shapes(2, c)
        skeys = {rep_key(shape_to_rep(s)) for s in shapes}
        classes = {k for k, r in indecomposables(q, c).items()
                   if maps_commute(r) and find_grading(r) is not None}
        rep.add(f"shapes with {c} cells <-> commuting graded L2 classes",
                skeys == classes and len(skeys) == len(shapes), f"{len(shapes)} shapes, {len(classes)} classes")
    counts = [nilpotent_class_count(loop_quiver(1), d) for d in range(1, d_max + 1)]
    rep.add("L1 class counts are partition numbers", counts == [1, 2, 3, 5, 7, 11, 15, 22][:d_max], counts)
    return rep


def suite_pseudotree(n_max: int = 1) -> Report:
    rep = Report("pseudotree")
    q = named_quiver("PT1")
    for n in range(1, n_max + 1):
        fam = pseudotree_family(q, n)
        keys = {rep_key(r) for r in fam}
        dim_ok = all(r.dim == 9 * n for r in fam)
        ok = all(is_indecomposable(r) and is_nilpotent_rep(r) for r in fam)
        rep.add(f"NI_PT1({9 * n}) >= {n}", len(keys) >= n and dim_ok and ok, f"{len(keys)} distinct classes")
    return rep


def suite_nil_order() -> Report:
    rep = Report("nil-order")
    rep.notes.append(NIL_DISCLAIMER)
    a2, l1, l2 = path_quiver(2), loop_quiver(1), loop_quiver(2)
    rep.add("A2 <= 2 L1 on n <= 4", nil_leq_check(a2, l1, 1, 2, 4))
    rep.add("L2 <= L1 fails on n <= 4", not nil_leq_check(l2, l1, 1, 1, 4))
    rep.add("L1 <= L2 on n <= 5", nil_leq_check(l1, l2, 1, 1, 5))
    return rep


def suite_colored(d_max: int = 3) -> Report:
    rep = Report("colored")
    quivers = [loop_quiver(1), loop_quiver(2), path_quiver(3), cycle_quiver([True, False, True])]
    for q in quivers:
        adm = counts = homs = True
        for d in range(1, d_max + 1):
            classes = list(brute_force_classes(q, d).values())
            for v in classes:
                g = gamma_of(v)
                adm &= check_admissible(g)
                for a in range(q.num_arrows):
                    srcs = sum(1 for x in range(g.num_vertices) if all(t != x or c != a for _, t, c in g.arrows))
                    snks = sum(1 for x in range(g.num_vertices) if all(s != x or c != a for s, _, c in g.arrows))
                    counts &= srcs == snks
            if d <= 2:
                for v in classes:
                    for w in classes:
                        homs &= chromatic_homs(v, w) == len(hom_set(v, w))
        rep.add(f"{q.name}: Gamma admissible", adm)
        rep.add(f"{q.name}: sources and sinks balance per color", counts)
        rep.add(f"{q.name}: hom bijection", homs)
    return rep


SUITES = {
    "l1-growth": lambda a: suite_l1_growth(a.max or 8),
    "finite-type-trees": lambda a: suite_finite_type(a.max or 8),
    "cycle-classification": lambda a: suite_cycle_classification(a.max or 6),
    "ses-counterexample": lambda a: suite_ses_counterexample(),
    "hall": lambda a: suite_hall(named_quiver(a.quiver or "L1"), a.dim_cap or 4),
    "n-to-n-1": lambda a: suite_n_to_n_minus_1(a.max or 4),
    "f-reduce": lambda a: suite_f_reduce(a.max or 3),
    "upper-bound": lambda a: suite_upper_bound(a.max or 3),
    "skew": lambda a: suite_skew(a.max or 5),
    "pseudotree": lambda a: suite_pseudotree(a.max or 1),
    "nil-order": lambda a: suite_nil_order(),
    "colored": lambda a: suite_colored(a.max or 3),
}


def run_suite(name: str, args) -> Report:
    if name not in SUITES:
        raise KeyError(name)
    t = time.perf_counter()
    rep = SUITES[name](args)
    rep.seconds = time.perf_counter() - t
    return rep


__all__ = ["Check", "Report", "SUITES", "run_suite", "NIL_DISCLAIMER", "tree_quivers",
           "classification_quivers", "check_f_reduce", "connected_graphs"]
