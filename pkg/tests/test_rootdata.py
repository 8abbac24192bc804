import pytest
from hypothesis import given, strategies as st

from excrystal.rootdata import (KINDS, RootDataError, automorphism, build_root_data, diagram_automorphisms,
                                level, level_zero_completion, simple_root, weyl_dimension)


def fund(rd, i, k=1):
    w = [0] * rd.size
    w[i] = k
    return tuple(w)


@pytest.mark.parametrize("kind", KINDS)
def test_cartan_shape(kind):
    rd = build_root_data(kind)
    for i in rd.index_set:
        assert rd.cartan[i][i] == 2
        for j in rd.index_set:
            assert rd.cartan[i][j] == rd.cartan[j][i]
            if i != j:
                assert rd.cartan[i][j] in (0, -1)


@pytest.mark.parametrize("kind,edges", [
    ("E6affine", {(0, 2), (2, 4), (1, 3), (3, 4), (4, 5), (5, 6)}),
    ("E7affine", {(0, 1), (1, 3), (3, 4), (2, 4), (4, 5), (5, 6), (6, 7)}),
])
def test_affine_edges(kind, edges):
    rd = build_root_data(kind)
    found = {(i, j) for i in rd.index_set for j in rd.index_set if i < j and rd.cartan[i][j] == -1}
    assert found == edges


def test_e6_chain_entries():
    rd = build_root_data("E6")
    assert rd.cartan[1][3] == -1
    assert rd.cartan[1][6] == 0
    assert rd.index_set == (1, 2, 3, 4, 5, 6)


def test_marks():
    assert build_root_data("E6affine").marks[:7] == (1, 1, 2, 2, 3, 2, 1)
    assert build_root_data("E7affine").marks[:8] == (1, 2, 2, 3, 4, 3, 2, 1)


@pytest.mark.parametrize("kind", ["E6affine", "E7affine"])
def test_marks_are_null(kind):
    rd = build_root_data(kind)
    for i in rd.index_set:
        assert sum(rd.cartan[i][j] * rd.marks[j] for j in rd.index_set) == 0
    delta = [sum(rd.marks[i] * simple_root(rd, i)[j] for i in rd.index_set) for j in range(rd.size)]
    assert level(rd, tuple(delta)) == 0


def test_positive_root_counts():
    assert len(build_root_data("E6").positive_roots) == 36
    assert len(build_root_data("E7").positive_roots) == 63


@pytest.mark.parametrize("kind", KINDS)
def test_simple_root_columns(kind):
    rd = build_root_data(kind)
    for i in rd.index_set:
        a = simple_root(rd, i)
        assert all(a[j] == rd.cartan[j][i] for j in rd.index_set)


def test_simple_root_e6_alpha1():
    rd = build_root_data("E6")
    assert simple_root(rd, 1) == (0, 2, 0, -1, 0, 0, 0)
    with pytest.raises(RootDataError):
        simple_root(rd, 0)


def test_level():
    rd = build_root_data("E6affine")
    assert level(rd, fund(rd, 0)) == 1
    assert level(rd, fund(rd, 2)) == 2
    with pytest.raises(RootDataError):
        level(build_root_data("E6"), fund(rd, 1))


def test_level_zero_completion():
    rd = build_root_data("E6affine")
    assert level_zero_completion(rd, fund(rd, 1)) == (-1, 1, 0, 0, 0, 0, 0)
    assert level_zero_completion(rd, rd.zero()) == rd.zero()
    assert level_zero_completion(rd, (0, 0, 0, 0, 0, 0, -1)) == (1, 0, 0, 0, 0, 0, -1)


@given(st.lists(st.integers(-5, 5), min_size=6, max_size=6))
def test_level_zero_completion_has_level_zero(coeffs):
    rd = build_root_data("E6affine")
    w = level_zero_completion(rd, (0, *coeffs))
    assert level(rd, w) == 0
    assert w[1:] == tuple(coeffs)


def test_weyl_dimension_examples():
    e6 = build_root_data("E6")
    assert weyl_dimension(e6, fund(e6, 1)) == 27
    assert weyl_dimension(e6, e6.zero()) == 1
    assert weyl_dimension(e6, fund(e6, 4)) == 2925
    assert weyl_dimension(e6, fund(e6, 2)) == 78
    e7 = build_root_data("E7")
    assert weyl_dimension(e7, fund(e7, 7)) == 56
    assert weyl_dimension(e7, fund(e7, 4)) == 365750
    with pytest.raises(RootDataError):
        weyl_dimension(e6, fund(e6, 1, -1))


@given(st.integers(0, 3), st.integers(0, 3))
def test_weyl_dimension_dual_symmetry(a, b):
    # the diagram flip 1<->6, 3<->5 preserves dimensions
    e6 = build_root_data("E6")
    w = (0, a, 0, b, 0, 0, 0)
    flipped = (0, 0, 0, 0, 0, b, a)
    assert weyl_dimension(e6, w) == weyl_dimension(e6, flipped)


def test_automorphisms():
    e6 = build_root_data("E6affine")
    p = automorphism(e6, "rotation3")
    assert [p(i) for i in range(7)] == [1, 6, 3, 5, 4, 2, 0]
    assert p.order == 3
    e7 = build_root_data("E7affine")
    q = automorphism(e7, "involution")
    assert [q(i) for i in range(8)] == [7, 6, 2, 5, 4, 3, 1, 0]
    assert q.order == 2
    assert automorphism(e6, "identity").order == 1


def test_automorphism_mismatch():
    with pytest.raises(RootDataError):
        automorphism(build_root_data("E6affine"), "involution")
    with pytest.raises(RootDataError):
        automorphism(build_root_data("E7affine"), "rotation3")
    with pytest.raises(RootDataError):
        automorphism(build_root_data("E6"), "identity")


def test_involution_is_the_unique_nontrivial_e7_symmetry():
    auts = diagram_automorphisms(build_root_data("E7affine"))
    assert sorted(a.order for a in auts) == [1, 2]


def test_e6_automorphisms_form_s3():
    auts = diagram_automorphisms(build_root_data("E6affine"))
    assert sorted(a.order for a in auts) == [1, 2, 2, 2, 3, 3]


@pytest.mark.parametrize("kind,name", [("E6affine", "rotation3"), ("E7affine", "involution")])
def test_automorphism_preserves_cartan(kind, name):
    rd = build_root_data(kind)
    p = automorphism(rd, name)
    assert all(rd.cartan[p(i)][p(j)] == rd.cartan[i][j] for i in rd.index_set for j in rd.index_set)
    w = tuple(range(rd.size))
    assert p.inverse().act(p.act(w)) == w


def test_unknown_kind():
    with pytest.raises(RootDataError):
        build_root_data("E8")
