from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from f1rep.colored import gamma_of, rep_key
from f1rep.enumeration import brute_force_classes
from f1rep.f1lin import subsets
from f1rep.hall import (HallAlgebra, HallElement, ZERO_KEY, check_associativity, check_bialgebra,
                        check_coassociativity, check_cocommutativity, check_consistency,
                        check_grading, check_primitives, check_twist_invariance, flip,
                        hall_coeff, key_str, parse_key, ses_count, sigma_twist, tensor_to_json)
from f1rep.quiver import loop_quiver, path_quiver
from f1rep.rep import (SubRep, aut_count, direct_sum_rep, jordan_chain, make_rep, quotient,
                       restrict, simple, zero_rep)

L0, L1, L2 = loop_quiver(0), loop_quiver(1), loop_quiver(2)
S = simple(L1, 0)
SS = direct_sum_rep(S, S)
CHAIN2 = jordan_chain(L1, 2)
ALG1 = HallAlgebra(L1, 4)
ALG2 = HallAlgebra(L2, 3)


def K(r):
    return rep_key(r)


def test_hall_coeff_examples():
    assert hall_coeff(SS, S, S) == 2
    assert hall_coeff(CHAIN2, S, S) == 1
    for r in (S, SS, CHAIN2, zero_rep(L1)):
        assert hall_coeff(r, zero_rep(L1), r) == 1


def test_ses_count_examples():
    assert ses_count(CHAIN2, S, S) == 1
    assert ses_count(SS, S, S) == 2
    for r in (S, SS, CHAIN2, jordan_chain(L1, 3)):
        assert ses_count(r, zero_rep(L1), r) == aut_count(r)


def test_product_examples():
    p = ALG1.product(HallElement.basis(K(S)), HallElement.basis(K(S)))
    assert p == HallElement({K(SS): 2, K(CHAIN2): 1})
    x = HallElement({K(CHAIN2): Fraction(1, 3), K(S): 2})
    assert ALG1.product(HallElement.basis(ZERO_KEY), x) == x
    assert ALG1.product(x, HallElement.basis(ZERO_KEY)) == x
    alg0 = HallAlgebra(L0, 2)
    s0 = simple(L0, 0)
    assert alg0.product(HallElement.basis(K(s0)), HallElement.basis(K(s0))) == \
        HallElement({K(direct_sum_rep(s0, s0)): 2})


def test_product_needs_table():
    with pytest.raises(ValueError, match="extend the table"):
        ALG2.basis_product(K(jordan_chain(L2, 2)), K(jordan_chain(L2, 2)))


def test_coproduct_examples():
    z = ZERO_KEY
    assert ALG1.basis_coproduct(K(S)) == {(K(S), z): 1, (z, K(S)): 1}
    assert ALG1.basis_coproduct(K(SS)) == {(K(SS), z): 1, (K(S), K(S)): 1, (z, K(SS)): 1}
    assert ALG1.basis_coproduct(K(CHAIN2)) == {(K(CHAIN2), z): 1, (z, K(CHAIN2)): 1}


def test_coproduct_by_direct_sums():
    # oracle: all ordered pairs of classes whose direct sum is R
    alg = ALG2
    for r in alg.keys():
        expect = {}
        for a in alg.keys():
            for b in alg.keys():
                if alg.rep(a).dim + alg.rep(b).dim == alg.rep(r).dim and \
                        K(direct_sum_rep(alg.rep(a), alg.rep(b))) == r:
                    expect[(a, b)] = 1
        assert alg.basis_coproduct(r) == expect


def test_lie_bracket_examples():
    alg = ALG1
    assert not alg.lie_bracket(K(S), K(S))
    a2 = path_quiver(2)
    alg_a = HallAlgebra(a2, 2)
    s0, s1 = simple(a2, 0), simple(a2, 1)
    arrow = make_rep(a2, (1, 1), [{1: 1}])
    br = alg_a.lie_bracket(K(s0), K(s1))
    assert set(br.terms) <= {K(arrow), K(direct_sum_rep(s0, s1))}
    assert br.terms.get(K(arrow), 0) != 0
    assert all(alg_a.rep(k).dim == 2 for k in br.terms)
    a3 = path_quiver(3)
    alg3 = HallAlgebra(a3, 2)
    assert not alg3.lie_bracket(K(simple(a3, 0)), K(simple(a3, 2)))
    with pytest.raises(ValueError):
        alg.lie_bracket(K(SS), K(S))


def test_sigma_twist_examples():
    v = make_rep(L2, (3,), [{1: 0, 2: 1, 3: 2}, {1: 0, 2: 0, 3: 1}])
    assert K(sigma_twist(v, (0, 1))) == K(v)
    sw = sigma_twist(v, (1, 0))
    assert K(sw) == K(make_rep(L2, (3,), [v.maps[1], v.maps[0]]))
    assert K(sigma_twist(sw, (1, 0))) == K(v)
    assert K(sw) != K(v)
    with pytest.raises(ValueError):
        sigma_twist(simple(path_quiver(2), 0), (0,))


def test_keys_json():
    assert key_str(ZERO_KEY) == "0" and parse_key("0") == ZERO_KEY
    k = K(CHAIN2)
    assert parse_key(key_str(k)) == k
    assert HallElement({k: Fraction(3, 2)}).to_json() == {k.hex(): "3/2"}
    assert tensor_to_json({(k, ZERO_KEY): Fraction(1)}) == {f"{k.hex()}|0": "1/1"}


# structure checks

@pytest.mark.parametrize("alg", [ALG1, ALG2], ids=["L1", "L2"])
def test_axioms(alg):
    assert check_consistency(alg) == []
    assert check_associativity(alg) == []
    assert check_coassociativity(alg) == []
    assert check_cocommutativity(alg) == []
    assert check_bialgebra(alg, 3) == []
    assert check_grading(alg) == []
    assert check_primitives(alg) == []


def test_twist_invariance_L2():
    assert check_twist_invariance(ALG2, (1, 0)) == []


def _hall_coeff_oracle(r, m, n):
    """Filter every family of subsets: closed, sub ~ n, quotient ~ m."""
    count = 0
    for fam in product(*[list(subsets(d)) for d in r.dims]):
        s = SubRep(r, tuple(frozenset(x) for x in fam))
        if not s.is_closed():
            continue
        if K(restrict(r, s.subsets)) == K(n) and K(quotient(r, s)) == K(m):
            count += 1
    return count


@pytest.mark.parametrize("alg", [ALG1, ALG2], ids=["L1", "L2"])
def test_hall_coeff_oracle(alg):
    keys = alg.keys()
    for r in keys:
        rr = alg.rep(r)
        if rr.dim > 3:
            continue
        for m in keys:
            for n in keys:
                if alg.rep(m).dim + alg.rep(n).dim == rr.dim:
                    assert alg.hall_coeff(r, m, n) == _hall_coeff_oracle(rr, alg.rep(m), alg.rep(n))


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_product_bilinear(data):
    keys = ALG1.keys(1) + ALG1.keys(2) + [ZERO_KEY]
    coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    x = HallElement({k: data.draw(coeffs) for k in data.draw(st.lists(st.sampled_from(keys), max_size=3))})
    y = HallElement({k: data.draw(coeffs) for k in data.draw(st.lists(st.sampled_from(keys), max_size=3))})
    z = HallElement({k: data.draw(coeffs) for k in data.draw(st.lists(st.sampled_from(ALG1.keys(2)), max_size=2))})
    c = data.draw(coeffs)
    assert ALG1.product(x + y.scale(c), z) == ALG1.product(x, z) + ALG1.product(y, z).scale(c)
    assert flip(ALG1.coproduct(x)) == ALG1.coproduct(x)
