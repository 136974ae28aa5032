import itertools

import pytest
from hypothesis import given, settings, strategies as st

from f1rep.colored import rep_key
from f1rep.corr import (ONE, ZERO, DecomposableError, MQModule, NoGradingError, NonCommutingError,
                        ShapeError, SkewShape, admits_grading, enumerate_shapes,
                        extension_counterexample, find_grading, idempotent, is_connected_shape,
                        is_shape_class, is_type_alpha, is_valid_shape, maps_commute, module_homs,
                        module_to_rep, mq_multiply, path, rep_to_module, rep_to_shape,
                        respects_relations, shape_to_rep, words)
from f1rep.enumeration import brute_force_classes, indecomposables, nilpotent_class_count
from f1rep.f1lin import F1Map, compose
from f1rep.hall import ses_count
from f1rep.quiver import loop_quiver, path_quiver
from f1rep.rep import (decompose, direct_sum_rep, hom_set, is_indecomposable, jordan_chain,
                       make_rep, simple)

from helpers import all_reps

L1, L2, A2 = loop_quiver(1), loop_quiver(2), path_quiver(2)
V = make_rep(L2, (3,), [{1: 0, 2: 1, 3: 2}, {1: 0, 2: 0, 3: 1}])


# monoid

def test_mq_multiply_examples():
    e0, e1 = idempotent(0), idempotent(1)
    assert mq_multiply(e0, e0, A2) == e0
    assert mq_multiply(e0, e1, A2) == ZERO
    a = path(0)
    # a * e0 = a (e0 acts first), e0 * a = 0 since a lands in vertex 1
    assert mq_multiply(a, e0, A2) == a
    assert mq_multiply(e1, a, A2) == a
    assert mq_multiply(e0, a, A2) == ZERO
    a3 = path_quiver(3)
    assert mq_multiply(path(1), path(0), a3) == path(0, 1)
    assert mq_multiply(path(0), path(1), a3) == ZERO
    assert mq_multiply(ONE, a, A2) == a and mq_multiply(a, ZERO, A2) == ZERO


@pytest.mark.parametrize("q", [A2, L2])
def test_mq_associative(q):
    elems = words(q, 3) + [ZERO]
    for a, b, c in itertools.product(elems, repeat=3):
        assert mq_multiply(mq_multiply(a, b, q), c, q) == mq_multiply(a, mq_multiply(b, c, q), q)


# modules

def test_rep_to_module_examples():
    m = rep_to_module(simple(A2, 0))
    assert m.dim == 1 and m.idems == ((1,), (0,)) and m.arrows == ((0,),)
    m = rep_to_module(V)
    assert m.dim == 3 and m.arrows == ((0, 1, 2), (0, 0, 1))
    assert respects_relations(m) and is_type_alpha(m)
    assert module_to_rep(m) == V


@pytest.mark.parametrize("q", [A2, L2])
def test_modules_faithful(q):
    reps = [r for n in range(3) for r in brute_force_classes(q, n).values()]
    keys = set()
    for v in reps:
        mv = rep_to_module(v)
        assert is_type_alpha(mv) and respects_relations(mv)
        keys.add((mv.dim, tuple(sorted(mv.arrows)), rep_key(module_to_rep(mv))))
        for w in reps:
            assert len(module_homs(mv, rep_to_module(w))) == len(hom_set(v, w))
    assert len(keys) == len(reps)


def test_type_alpha_examples():
    bad = MQModule(L1, 3, ((1, 2, 3),), ((3, 3, 0),))
    assert not is_type_alpha(bad)
    assert is_type_alpha(MQModule(L1, 0, ((),), ((),)))


def _bounded_type_alpha(m):
    """Word-length bounded check: words up to length = carrier dim."""
    acts = [m.act(w) for w in words(m.quiver, m.dim)]
    for f in acts:
        nz = [j for j in f if j]
        if len(nz) != len(set(nz)):
            return False
    return True


def test_type_alpha_closure_matches_word_bound():
    # all pointed self-maps of [d] with d <= 3 as the single L1 generator
    for d in range(4):
        for img in itertools.product(range(d + 1), repeat=d):
            ident = tuple(range(1, d + 1))
            m = MQModule(L1, d, (ident,), (tuple(img),))
            assert is_type_alpha(m) == _bounded_type_alpha(m)


# shapes

def test_shape_validity_examples():
    assert not is_valid_shape(SkewShape.of([(0, 0), (1, 1)]))
    sq = SkewShape.of([(0, 0), (0, 1), (1, 0), (1, 1)])
    assert is_valid_shape(sq) and is_connected_shape(sq)
    far = SkewShape.of([(0, 0), (5, 7)])
    assert not is_valid_shape(far) or not is_connected_shape(far)
    far = SkewShape.of([(0, 3), (3, 0)])
    assert is_valid_shape(far) and not is_connected_shape(far)


def test_shape_normalization_and_json():
    s = SkewShape.of([(5, 5), (6, 5)])
    assert s == SkewShape.of([(0, 0), (1, 0)])
    assert s.to_json() == {"n": 2, "cells": [[0, 0], [1, 0]]}
    assert SkewShape.from_json(s.to_json()) == s
    assert SkewShape.of([(0, 0), (1, 0), (1, 1)]).ascii() == ".#\n##"


def test_shape_to_rep_examples():
    assert rep_key(shape_to_rep(SkewShape.of([(0, 0)]))) == rep_key(simple(L2, 0))
    dom = shape_to_rep(SkewShape.of([(0, 0), (1, 0)]))
    assert dom.dim == 2 and dom.maps[0].rank == 1 and dom.maps[1].is_zero()
    sq = shape_to_rep(SkewShape.of([(0, 0), (0, 1), (1, 0), (1, 1)]))
    f1f2 = compose(sq.maps[0], sq.maps[1])
    assert sq.dim == 4 and f1f2 == compose(sq.maps[1], sq.maps[0]) and not f1f2.is_zero()
    with pytest.raises(ValueError):
        shape_to_rep(SkewShape.of([(0, 0), (1, 1)]))


def test_rep_to_shape_examples():
    for k in range(1, 6):
        s = rep_to_shape(jordan_chain(L1, k))
        assert s == SkewShape.of([(i,) for i in range(k)])
    sq = SkewShape.of([(0, 0), (0, 1), (1, 0), (1, 1)])
    assert rep_to_shape(shape_to_rep(sq)) == sq
    r, _, _ = extension_counterexample()
    with pytest.raises(NonCommutingError, match="maps do not commute"):
        rep_to_shape(r)
    with pytest.raises(DecomposableError):
        rep_to_shape(direct_sum_rep(simple(L2, 0), simple(L2, 0)))


# f2 walks a -> c -> b while f1 jumps a -> b directly
UNGRADED = make_rep(L2, (3,), [{1: 2, 2: 0, 3: 0}, {1: 3, 2: 0, 3: 2}])


def test_admits_grading_examples():
    for c in range(1, 5):
        for s in enumerate_shapes(2, c):
            sigma, _ = find_grading(shape_to_rep(s))
            assert sigma == (0, 1)
    assert admits_grading(direct_sum_rep(simple(L2, 0), simple(L2, 0))) is not None
    assert maps_commute(UNGRADED) and is_indecomposable(UNGRADED)
    assert admits_grading(UNGRADED) is None
    with pytest.raises(NoGradingError):
        rep_to_shape(UNGRADED)


def test_ungraded_commuting_reps_exist_in_small_dims():
    found = [r for n in range(1, 5) for r in indecomposables(L2, n).values()
             if maps_commute(r) and find_grading(r) is None]
    assert min(r.dim for r in found) == 2
    # both loops send 1 to 2, so the two unit steps would have to coincide
    twin = make_rep(L2, (2,), [{1: 2, 2: 0}, {1: 2, 2: 0}])
    assert rep_key(twin) in {rep_key(r) for r in found}
    assert rep_key(UNGRADED) in {rep_key(r) for r in found}


def test_enumerate_shapes_examples():
    for k in range(1, 7):
        assert len(enumerate_shapes(1, k)) == 1
    assert len(enumerate_shapes(2, 1)) == 1
    assert len(enumerate_shapes(2, 2)) == 2


def _brute_shapes(n, c):
    """Oracle: convex connected subsets of the box [0, c)^n, normalized."""
    box = list(itertools.product(range(c), repeat=n))
    out = set()
    for cells in itertools.combinations(box, c):
        s = SkewShape.of(cells)
        if is_valid_shape(s) and is_connected_shape(s):
            out.add(s)
    return out


@pytest.mark.parametrize("n,c", [(2, 1), (2, 2), (2, 3), (2, 4), (1, 4), (3, 2), (3, 3)])
def test_enumerate_shapes_oracle(n, c):
    shapes = enumerate_shapes(n, c)
    assert set(shapes) == _brute_shapes(n, c)
    assert shapes == sorted(shapes, key=lambda s: s.sorted_cells())


def test_shape_counts_frozen():
    assert [len(enumerate_shapes(2, c)) for c in range(1, 6)] == [1, 2, 4, 9, 20]
    assert [len(enumerate_shapes(3, c)) for c in range(1, 4)] == [1, 3, 9]


@pytest.mark.parametrize("c", range(1, 6))
def test_shape_correspondence(c):
    shapes = enumerate_shapes(2, c)
    skeys = [rep_key(shape_to_rep(s)) for s in shapes]
    assert len(set(skeys)) == len(shapes)
    classes = {k for k, r in indecomposables(L2, c).items() if is_shape_class(r)}
    assert set(skeys) == classes
    for k, r in indecomposables(L2, c).items():
        if k in classes:
            assert rep_key(shape_to_rep(rep_to_shape(r))) == k


def test_partition_numbers():
    assert [nilpotent_class_count(L1, d) for d in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_extension_counterexample():
    r, m, n = extension_counterexample()
    assert ses_count(r, m, n) >= 1
    assert maps_commute(m) and maps_commute(n)
    assert not maps_commute(r)
    assert rep_to_shape(m) == SkewShape.of([(0, 0), (1, 0)])


@given(st.integers(1, 6), st.data())
@settings(max_examples=30, deadline=None)
def test_shape_roundtrip_property(c, data):
    shapes = enumerate_shapes(2, c)
    s = data.draw(st.sampled_from(shapes))
    v = shape_to_rep(s)
    assert is_shape_class(v)
    assert rep_to_shape(v) == s
