import itertools
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from f1rep.f1lin import (F1Map, compose, count_maps, direct_sum, enumerate_automorphisms,
                         enumerate_injections, enumerate_maps, from_dict, identity, inverse,
                         is_nilpotent, power, zero_map)

from conftest import f1maps


def m(src, tgt, *image):
    return F1Map(src, tgt, image)


# examples

def test_compose_identity():
    f = m(2, 2, 2, 0)
    assert compose(identity(2), f) == f


def test_compose_zero_absorbs():
    assert compose(zero_map(1, 1), m(1, 1, 1)) == zero_map(1, 1)


def test_compose_by_hand():
    f = m(2, 2, 2, 1)
    g = m(2, 2, 0, 1)
    # 1 -> 2 -> 1, 2 -> 1 -> 0
    assert compose(g, f) == m(2, 2, 1, 0)


def test_compose_mismatch():
    with pytest.raises(ValueError):
        compose(identity(2), identity(3))


def test_invalid_map_rejected():
    with pytest.raises(ValueError):
        F1Map(2, 2, (1, 1))
    with pytest.raises(ValueError):
        F1Map(1, 1, (2,))
    with pytest.raises(ValueError):
        F1Map(2, 1, (1,))


def test_direct_sum_examples():
    assert direct_sum(zero_map(1, 1), zero_map(1, 1)) == zero_map(2, 2)
    assert direct_sum(m(1, 1, 1), m(1, 1, 0)) == m(2, 2, 1, 0)
    h = m(2, 3, 3, 1)
    assert direct_sum(F1Map(0, 0, ()), h) == h


def test_is_nilpotent_examples():
    assert not is_nilpotent(identity(1))
    assert is_nilpotent(zero_map(3, 3))
    assert is_nilpotent(m(3, 3, 2, 3, 0))
    with pytest.raises(ValueError):
        is_nilpotent(zero_map(1, 2))


def test_enumerate_maps_examples():
    assert len(enumerate_maps(0, 4)) == 1
    assert enumerate_maps(1, 1) == [m(1, 1, 0), m(1, 1, 1)]
    assert len(enumerate_maps(2, 2)) == 7


def test_kernel_and_image():
    f = m(3, 2, 0, 2, 0)
    assert f.kernel == {1, 3}
    assert f.image_set == {2}
    assert f.rank == 1
    assert f(0) == 0 and f(2) == 2


def test_json_roundtrip():
    f = m(3, 4, 4, 0, 1)
    assert f.to_json() == {"src": 3, "tgt": 4, "image": [4, 0, 1]}
    assert F1Map.from_json(f.to_json()) == f


def test_from_dict_and_inverse():
    f = from_dict(3, 3, {1: 2, 2: 3, 3: 1})
    assert compose(inverse(f), f) == identity(3)
    with pytest.raises(ValueError):
        inverse(m(2, 2, 1, 0))


def test_power():
    f = m(3, 3, 0, 1, 2)
    assert power(f, 0) == identity(3)
    assert power(f, 2) == m(3, 3, 0, 0, 1)
    assert power(f, 3) == zero_map(3, 3)


# exhaustive checks against independent oracles

def _brute_maps(a, b):
    out = []
    for image in itertools.product(range(b + 1), repeat=a):
        nz = [j for j in image if j]
        if len(nz) == len(set(nz)):
            out.append(F1Map(a, b, image))
    return out


@pytest.mark.parametrize("a,b", [(a, b) for a in range(6) for b in range(6)])
def test_enumerate_maps_count_and_order(a, b):
    closed = sum(comb(a, k) * comb(b, k) * factorial(k) for k in range(min(a, b) + 1))
    maps = enumerate_maps(a, b)
    assert len(maps) == closed == count_maps(a, b)
    if a <= 4 and b <= 4:
        # lexicographic on the image array, same set as the product filter
        assert maps == sorted(_brute_maps(a, b), key=lambda f: f.image)


def test_injections_and_automorphisms():
    for a in range(4):
        for b in range(4):
            inj = enumerate_injections(a, b)
            assert all(f.is_injective() for f in inj)
            assert len(inj) == (factorial(b) // factorial(b - a) if a <= b else 0)
    assert len(enumerate_automorphisms(4)) == 24


def _nilpotent_by_orbit(f):
    # no nonzero element returns to itself
    for k in range(1, f.src + 1):
        x = f(k)
        for _ in range(f.src):
            if x == 0:
                break
            if x == k:
                return False
            x = f(x)
    return True


@pytest.mark.parametrize("n", range(6))
def test_nilpotency_formulations_agree(n):
    for f in enumerate_maps(n, n):
        a = is_nilpotent(f)
        assert a == is_nilpotent(compose(f, f))
        assert a == _nilpotent_by_orbit(f)
        assert a == power(f, n).is_zero()


# properties

@given(st.data())
def test_compose_is_partial_injection(data):
    a, b, c = (data.draw(st.integers(0, 5)) for _ in range(3))
    f = data.draw(f1maps(src=a, tgt=b))
    g = data.draw(f1maps(src=b, tgt=c))
    h = compose(g, f)
    for k in range(1, a + 1):
        assert h(k) == g(f(k))


@given(f1maps())
def test_rank_nullity(f):
    assert len(f.kernel) + len(f.image_set) == f.src


@given(st.data())
@settings(max_examples=50)
def test_compose_associative(data):
    a, b, c, d = (data.draw(st.integers(0, 4)) for _ in range(4))
    f = data.draw(f1maps(src=a, tgt=b))
    g = data.draw(f1maps(src=b, tgt=c))
    h = data.draw(f1maps(src=c, tgt=d))
    assert compose(h, compose(g, f)) == compose(compose(h, g), f)


@given(f1maps(), f1maps())
def test_direct_sum_blocks(f, g):
    s = direct_sum(f, g)
    assert (s.src, s.tgt) == (f.src + g.src, f.tgt + g.tgt)
    for k in range(1, f.src + 1):
        assert s(k) == f(k)
    for k in range(1, g.src + 1):
        assert s(f.src + k) == (g(k) + f.tgt if g(k) else 0)
