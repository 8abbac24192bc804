from hypothesis import given, settings, strategies as st

from excrystal.letters import get_alphabet
from excrystal.rootdata import build_root_data, level, simple_root
from excrystal.tensor import (element, element_label, is_highest_weight, shape, signature, tensor_e,
                              tensor_eps, tensor_f, tensor_phi, tensor_weight)

A = get_alphabet("E6")
A7 = get_alphabet("E7")


def naive_signature(A, b, i):
    """Cancel '+-' by string rewriting; positions via tagged symbols."""
    syms = []
    for pos, a in enumerate(b):
        syms += [("-", pos)] * A.phi[i][a] + [("+", pos)] * A.eps[i][a]
    changed = True
    while changed:
        changed = False
        for k in range(len(syms) - 1):
            if syms[k][0] == "+" and syms[k + 1][0] == "-":
                del syms[k:k + 2]
                changed = True
                break
    minus = [p for s, p in syms if s == "-"]
    plus = [p for s, p in syms if s == "+"]
    return len(minus), len(plus), (minus[-1] if minus else None), (plus[0] if plus else None)


elements = st.lists(st.integers(0, len(A) - 1), max_size=5).map(tuple)
colors = st.sampled_from(A.rd.index_set)


def test_signature_two_tops():
    b = element(A, "-0,1", "-0,1")
    sig = signature(A, b, 1)
    assert (sig.minus_count, sig.plus_count, sig.f_position) == (2, 0, 1)


def test_signature_hw_pair():
    u1, u6 = A.hw[1], A.hw[6]
    for i in A.rd.index_set:
        assert signature(A, (u1, u6), i).plus_count == 0


def test_signature_adjoint_generator():
    b = element(A, "2,-1,-0", "-0,1")
    sig = signature(A, b, 2)
    assert (sig.minus_count, sig.plus_count) == (1, 0)


def test_f1_on_two_tops():
    assert tensor_f(A, element(A, "-0,1", "-0,1"), 1) == element(A, "-0,1", "-0,-1,3")


def test_tensor_weight():
    assert tensor_weight(A, ()) == (0,) * 7
    w = tensor_weight(A, element(A, "2,-1,-0", "-0,1"))
    assert w == (-2, 0, 1, 0, 0, 0, 0)
    assert level(build_root_data("E6affine"), w) == 0


def test_empty_element():
    for i in A.rd.index_set:
        assert tensor_f(A, (), i) is None and tensor_e(A, (), i) is None
    assert is_highest_weight(A, ())
    assert element_label(A, ()) == "∅"


def test_shape_and_label():
    b = element(A, "2,-1,-0", "-0,1")
    assert shape(A, b) == (6, 1)
    assert element_label(A, b) == "0̅1̅2 ⊗ 0̅1"


@settings(max_examples=300)
@given(elements, colors)
def test_signature_matches_naive(b, i):
    sig = signature(A, b, i)
    assert tuple(sig) == naive_signature(A, b, i)


@settings(max_examples=300)
@given(elements, colors)
def test_f_e_inverse(b, i):
    c = tensor_f(A, b, i)
    if c is not None:
        assert tensor_e(A, c, i) == b
        assert tensor_phi(A, c, i) == tensor_phi(A, b, i) - 1
        alpha = simple_root(A.rd, i)
        assert tensor_weight(A, c)[1:] == tuple(x - y for x, y in zip(tensor_weight(A, b), alpha))[1:]
    d = tensor_e(A, b, i)
    if d is not None:
        assert tensor_f(A, d, i) == b


@settings(max_examples=300)
@given(elements, colors)
def test_phi_minus_eps_is_weight(b, i):
    assert tensor_phi(A, b, i) - tensor_eps(A, b, i) == tensor_weight(A, b)[i]


@given(st.lists(st.integers(0, len(A7) - 1), max_size=4).map(tuple), st.sampled_from(A7.rd.index_set))
def test_e7_phi_minus_eps(b, i):
    assert tensor_phi(A7, b, i) - tensor_eps(A7, b, i) == tensor_weight(A7, b)[i]
