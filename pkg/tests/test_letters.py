import pytest

from excrystal.graph import CrystalGraphError
from excrystal.letters import (LetterError, bar_label, dual, get_alphabet, load_fixture, minuscule_crystal,
                               parse_latex_label, parse_weight, read_fixture, signed_label, stats, step)
from excrystal.rootdata import build_root_data, level, level_zero_completion, simple_root

E6 = build_root_data("E6")
E7 = build_root_data("E7")


@pytest.fixture(scope="module")
def b1():
    return minuscule_crystal(E6, 1)


def node(g, label):
    return g.index_of(parse_weight(E6 if g.rd.kind.startswith("E6") else E7, label))


def test_sizes():
    assert len(minuscule_crystal(E6, 1)) == 27
    assert len(minuscule_crystal(E6, 6)) == 27
    assert len(minuscule_crystal(E7, 7)) == 56


def test_not_minuscule():
    with pytest.raises(LetterError):
        minuscule_crystal(E6, 2)
    with pytest.raises(LetterError):
        minuscule_crystal(E7, 1)


@pytest.mark.parametrize("kind,i", [("E6", 1), ("E6", 6), ("E7", 7)])
def test_minuscule_properties(kind, i):
    rd = build_root_data(kind)
    g = minuscule_crystal(rd, i)
    aff = rd.affine()
    assert len(set(g.weights)) == len(g)
    for w in g.weights:
        assert all(w[j] in (-1, 0, 1) for j in rd.index_set)
        assert level(aff, w) == 0
    for j in rd.index_set:
        assert max(g.eps(j)) <= 1 and max(g.phi(j)) <= 1
    for s, d, j in g.arrows():
        a = simple_root(rd, j)
        diff = tuple(x - y for x, y in zip(g.weights[s], g.weights[d]))
        assert diff[1:] == a[1:]
        assert diff == level_zero_completion(aff, a)
    assert len(g.hw_nodes()) == 1


def test_no_opposite_weights(b1):
    ws = set(b1.weights)
    assert not any(tuple(-x for x in w) in ws for w in ws)


@pytest.mark.parametrize("kind,i,name", [("E6", 1, "e6_lambda1.txt"), ("E7", 7, "e7_lambda7.txt")])
def test_matches_fixture(kind, i, name):
    rd = build_root_data(kind)
    g = minuscule_crystal(rd, i)
    nodes, arrows = load_fixture(name, rd)
    assert sorted(nodes) == list(g.keys)
    assert g.arrow_set() == arrows


def test_f4_edge(b1):
    assert step(b1, node(b1, "-0,-3,4"), 4) == node(b1, "-0,-4,2,5")


def test_step_and_stats(b1):
    top = node(b1, "-0,1")
    assert step(b1, top, 1) == node(b1, "-0,-1,3")
    assert step(b1, top, 1, "e") is None
    x = node(b1, "-2,5")
    wt, eps, phi = stats(b1, x)
    assert eps[2] == 1 and phi[2] == 0
    for n in range(len(b1)):
        wt, eps, phi = stats(b1, n)
        assert all(phi[i] - eps[i] == wt[i] for i in E6.index_set)
    with pytest.raises(CrystalGraphError):
        step(b1, 99, 1)
    with pytest.raises(CrystalGraphError):
        stats(b1, -1)


def test_hw_and_sink(b1):
    assert b1.hw_nodes() == [node(b1, "-0,1")]
    sink = node(b1, "-6,0")
    assert all(step(b1, sink, i) is None for i in E6.index_set)


def test_dual_is_lambda6(b1):
    d = dual(b1)
    b6 = minuscule_crystal(E6, 6)
    assert d.keys == b6.keys
    assert d.arrow_set() == b6.arrow_set()
    assert d.weights[d.hw_nodes()[0]] == level_zero_completion(E6.affine(), E6.fundamental(6))


def test_dual_involution(b1):
    dd = dual(dual(b1))
    assert dd.keys == b1.keys and dd.arrow_set() == b1.arrow_set()


def test_dual_negates(b1):
    d = dual(b1)
    top = parse_weight(E6, "-0,1")
    assert tuple(-x for x in top) in set(d.weights)
    assert tuple(-x for x in top) == (1, -1, 0, 0, 0, 0, 0)


def test_e7_hw():
    g = minuscule_crystal(E7, 7)
    assert [g.keys[n] for n in g.hw_nodes()] == [parse_weight(E7, "-0,7")]


def test_labels():
    w = parse_weight(E6, "-0,-4,2,5")
    assert w == (-1, 0, 1, 0, -1, 1, 0)
    assert signed_label(w) == "-0,-4,2,5"
    assert bar_label(w) == "0̅4̅25"
    assert parse_latex_label(E6, r"\bar{0}\bar{4}25") == w
    assert parse_weight(E6, "-4,2,5") == w  # index 0 restored


def test_parse_errors():
    with pytest.raises(LetterError):
        parse_weight(E6, "0,1")  # wrong level
    with pytest.raises(LetterError):
        parse_weight(E6, "x")
    with pytest.raises(LetterError):
        parse_weight(E6, "9")


def test_read_fixture_errors():
    with pytest.raises(LetterError):
        read_fixture("-0,1\n", E6)
    with pytest.raises(LetterError):
        read_fixture("[arrows]\n-0,1 => -0,-1,3\n", E6)


def test_alphabets():
    A = get_alphabet("E6")
    assert len(A) == 54
    assert len(get_alphabet("E7")) == 56
    a = A.letter("-0,1")
    assert A.console(a) == [1]
    assert A.console(A.letter("-0,-1,3")) == [-1, 3]
    assert A.console(A.letter("-1,2")) == [2, -1]  # a B(Lambda_6) letter
    with pytest.raises(LetterError):
        get_alphabet("F4")
    with pytest.raises(LetterError):
        A.letter("-0,2")
