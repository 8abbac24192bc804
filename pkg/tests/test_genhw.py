from itertools import product

import pytest

from excrystal.genhw import (GenerationError, check_dimension, fundamental_members, fundamental_seed,
                             generate_component, highest_weight_crystal, hw_nodes, is_pairwise_weakly_increasing,
                             kn_generator, pair_members, parse_element, verify_kn_counterexample, wi_fast_L1,
                             wi_fast_L2)
from excrystal.letters import get_alphabet
from excrystal.rootdata import build_root_data
from excrystal.tensor import element, is_highest_weight, tensor_e, tensor_f

E6 = build_root_data("E6")
A = get_alphabet("E6")
B1 = sorted(a for a in range(len(A)) if A.crystal_of[a] == 1)


def unit(i, k=1, n=6):
    w = [0] * n
    w[i - 1] = k
    return tuple(w)


@pytest.fixture(scope="module")
def adjoint():
    return highest_weight_crystal(E6, unit(2))


def test_adjoint_seed(adjoint):
    g = generate_component(A, element(A, "2,-1,-0", "-0,1"), A.rd.index_set)
    assert len(g) == 78
    assert g.keys == adjoint.keys


def test_empty_seed():
    g = generate_component(A, ())
    assert len(g) == 1 and g.num_arrows() == 0


def test_lambda4_seed():
    g = generate_component(A, element(A, "-0,-3,4", "-0,-1,3", "-0,1"))
    assert len(g) == 2925


def test_zero_weight():
    assert len(highest_weight_crystal(E6, unit(1, 0))) == 1


@pytest.mark.parametrize("i", range(1, 7))
def test_e6_fundamental_dimensions(i):
    g = highest_weight_crystal(E6, unit(i))
    generated, oracle = check_dimension(g)
    assert generated == oracle
    assert g.hw_nodes() == [0]


@pytest.mark.parametrize("w", [(2, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 1), (0, 0, 1, 0, 0, 1), (1, 1, 0, 0, 0, 0)])
def test_sums_match_weyl(w):
    g = highest_weight_crystal(E6, w)
    generated, oracle = check_dimension(g)
    assert generated == oracle
    assert len(g.hw_nodes()) == 1


def test_two_lambda2():
    assert len(highest_weight_crystal(E6, unit(2, 2))) == 2430


def test_e7_small():
    e7 = build_root_data("E7")
    for i, d in ((7, 56), (1, 133), (6, 1539)):
        g = highest_weight_crystal(e7, unit(i, n=7))
        assert check_dimension(g) == (d, d)


def test_cap():
    with pytest.raises(GenerationError):
        highest_weight_crystal(E6, unit(2), cap=10)


def test_bad_weights():
    with pytest.raises(GenerationError):
        highest_weight_crystal(E6, unit(1, -1))
    with pytest.raises(GenerationError):
        highest_weight_crystal(E6, (1, 0))
    with pytest.raises(GenerationError):
        fundamental_seed("E6", 7)


def test_pairwise_examples():
    top, nxt = A.letter("-0,1"), A.letter("-0,-1,3")
    assert is_pairwise_weakly_increasing("E6", [(top,), (nxt,)], [1, 1])
    assert not is_pairwise_weakly_increasing("E6", [(nxt,), (top,)], [1, 1])
    u1, u6 = fundamental_seed("E6", 1), fundamental_seed("E6", 6)
    u2 = fundamental_seed("E6", 2)
    for x, kx in ((u1, 1), (u6, 6), (u2, 2)):
        for y, ky in ((u1, 1), (u6, 6), (u2, 2)):
            assert is_pairwise_weakly_increasing("E6", [x, y], [kx, ky])
    d_prime = element(A, "0,1,-3", "-0,-1,3")
    assert d_prime in fundamental_members("E6", 2)
    assert not is_pairwise_weakly_increasing("E6", [d_prime, d_prime], [2, 2])
    with pytest.raises(GenerationError):
        is_pairwise_weakly_increasing("E6", [u1], [1, 1])


def test_wi_fast_l1():
    assert wi_fast_L1(A.letter("-0,1"), A.letter("-6,0"))
    assert all(wi_fast_L1(b, b) for b in B1)
    pairs = pair_members("E6", 1, 1)
    for x, y in product(B1, B1):
        assert wi_fast_L1(x, y) == ((x, y) in pairs)


def test_wi_fast_l2(adjoint):
    pairs = pair_members("E6", 2, 2)
    for x, y in product(adjoint.keys, adjoint.keys):
        assert wi_fast_L2(x, y) == (x + y in pairs)


def test_pairwise_is_component_for_three_lambda1():
    g = highest_weight_crystal(E6, unit(1, 3))
    pwi = {(x, y, z) for x, y, z in product(B1, B1, B1)
           if is_pairwise_weakly_increasing("E6", [(x,), (y,), (z,)], [1, 1, 1])}
    assert pwi == set(g.keys)


def test_pairwise_is_component_mixed():
    B6 = [a for a in range(len(A)) if A.crystal_of[a] == 6]
    g = highest_weight_crystal(E6, (1, 0, 0, 0, 0, 1))
    pwi = {(x, y) for x, y in product(B1, B6) if is_pairwise_weakly_increasing("E6", [(x,), (y,)], [1, 6])}
    assert pwi == set(g.keys)


def test_operators_preserve_pairwise():
    pwi = {(x, y, z) for x, y, z in product(B1, B1, B1)
           if is_pairwise_weakly_increasing("E6", [(x,), (y,), (z,)], [1, 1, 1])}
    for b in pwi:
        for i in A.rd.index_set:
            for c in (tensor_f(A, b, i), tensor_e(A, b, i)):
                assert c is None or c in pwi


def test_operators_preserve_pairwise_adjoint(adjoint):
    comp = set(highest_weight_crystal(E6, unit(2, 2)).keys)
    for b in comp:
        for i in A.rd.index_set:
            for c in (tensor_f(A, b, i), tensor_e(A, b, i)):
                if c is not None:
                    assert is_pairwise_weakly_increasing("E6", [c[:2], c[2:]], [2, 2])


def test_hw_nodes():
    g = highest_weight_crystal(E6, unit(1))
    got = {g.label(n) for n in hw_nodes(g, (1,))}
    assert got == {"0̅1", "0̅1̅3", "1̅6"}
    adj = highest_weight_crystal(E6, unit(2))
    assert hw_nodes(adj) == [0]
    assert len(hw_nodes(adj, (6,))) == 4
    level0 = hw_nodes(adj, (6,), level0=True)
    assert all(adj.weights[n][0] >= 0 for n in level0)


def test_kn_counterexample():
    entries = verify_kn_counterexample()
    assert len(entries) == 6
    assert len({e.kinds for e in entries}) == 6
    for e in entries:
        assert e.in_shape and e.highest_weight and e.pairwise and not e.is_generator


def test_kn_generator_is_pairwise():
    parts, kinds = kn_generator()
    assert kinds == (1, 2, 6)
    assert is_pairwise_weakly_increasing("E6", parts, kinds)
    assert is_highest_weight(A, tuple(a for p in parts for a in p))


def test_parse_element():
    assert parse_element(A, "2,-1,-0 | -0,1") == element(A, "2,-1,-0", "-0,1")
