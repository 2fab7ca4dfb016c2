import pytest
from hypothesis import given, settings, strategies as st

from hssrigidity.diagram import (
    B_TYPE, C_TYPE, D_TYPE, E_TYPE, LINEAR_A, MIDDLE_A, catalog, check_abelian,
    containing_chain, is_maximal_linear, k_invariant, marked, schubert_class,
    smooth_schubert_varieties, stabilizer_nodes, subdiagram,
)
from hssrigidity.errors import InvalidSubdiagram, WrongType

CATALOG = catalog(7)
IDS = [md.space_id for md in CATALOG]


def test_catalog_membership():
    ids = set(IDS)
    for s in ["A1:1", "A5:3", "B3:1", "C4:4", "D4:1", "D4:3", "D4:4", "D7:7", "E6:1", "E6:6", "E7:7"]:
        assert s in ids
    for s in ["B3:2", "B3:3", "C4:1", "D5:2", "E6:2", "E7:1"]:
        assert s not in ids
    assert len(CATALOG) == 58


def test_dimensions():
    for m in range(1, 5):
        for n in range(m + 1, 8):
            assert marked("A", n - 1, m).dim == m * (n - m)
    for n in range(2, 8):
        assert marked("B", n, 1).dim == 2 * n - 1
        assert marked("C", n, n).dim == n * (n + 1) // 2
    for n in range(3, 8):
        assert marked("D", n, 1).dim == 2 * n - 2
        assert marked("D", n, n).dim == n * (n - 1) // 2
    assert marked("E", 6, 1).dim == 16
    assert marked("E", 7, 7).dim == 27


def test_odd_quadric_flag():
    assert marked("B", 3, 1).odd_quadric
    assert marked("C", 2, 2).odd_quadric
    assert not marked("C", 3, 3).odd_quadric
    assert not marked("D", 4, 1).odd_quadric


@pytest.mark.parametrize("md", CATALOG, ids=IDS)
def test_abelian_nilradical(md):
    assert check_abelian(md)


def test_classification_examples():
    a5 = marked("A", 5, 3)
    assert subdiagram(a5, [3]).marked_type == LINEAR_A
    assert subdiagram(a5, [3, 4, 5]).marked_type == LINEAR_A
    assert subdiagram(a5, [2, 3, 4]).marked_type == MIDDLE_A
    d5 = marked("D", 5, 1)
    assert subdiagram(d5, [1, 2, 3, 4, 5]).marked_type == D_TYPE
    assert subdiagram(d5, [1, 2, 3]).marked_type == LINEAR_A
    c4 = marked("C", 4, 4)
    assert subdiagram(c4, [3, 4]).marked_type == C_TYPE
    b4 = marked("B", 4, 1)
    assert subdiagram(b4, [1, 2, 3, 4]).marked_type == B_TYPE
    e6 = marked("E", 6, 1)
    assert subdiagram(e6, range(1, 7)).marked_type == E_TYPE
    assert subdiagram(e6, [1, 3, 4, 5, 2]).marked_type == D_TYPE


def test_invalid_subdiagrams():
    a5 = marked("A", 5, 3)
    with pytest.raises(InvalidSubdiagram):
        subdiagram(a5, [1, 2])
    with pytest.raises(InvalidSubdiagram):
        subdiagram(a5, [1, 3])
    with pytest.raises(InvalidSubdiagram):
        subdiagram(a5, [3, 9])
    with pytest.raises(InvalidSubdiagram):
        marked("A", 3, 5)


def test_smooth_schubert_count():
    # chains through node 3 of A5: choose left end in {1,2,3} and right end in {3,4,5}
    assert len(smooth_schubert_varieties(marked("A", 5, 3))) == 9
    assert len(smooth_schubert_varieties(marked("A", 5, 3), include_full=False)) == 8


def test_schubert_class_examples():
    md = marked("A", 5, 3)
    sc = schubert_class(md, subdiagram(md, [2, 3, 4]))
    assert sc.k == 4
    assert set(sc.delta_nw) == {(0, 1, 1, 0, 0), (0, 0, 1, 0, 0), (0, 1, 1, 1, 0), (0, 0, 1, 1, 0)}
    sc = schubert_class(md, subdiagram(md, [3]))
    assert sc.k == 1 and sc.delta_nw == ((0, 0, 1, 0, 0),)


def test_k_invariant_values():
    assert k_invariant(marked("A", 5, 3)) == 1
    assert k_invariant(marked("A", 4, 1)) == 4
    assert k_invariant(marked("C", 4, 4)) == 2
    # odd quadrics have rank-one homology in every degree
    assert k_invariant(marked("B", 3, 1)) == 5


def _to_branch(md):
    # nodes on the path from gamma to the branch node, inclusive
    rs = md.rs
    branch = next(i for i in range(1, rs.rank + 1) if len(rs.adjacency[i]) == 3)
    prev, path = {md.gamma: None}, [md.gamma]
    while path:
        i = path.pop()
        for j in rs.adjacency[i]:
            if j not in prev:
                prev[j] = i
                path.append(j)
    n, cur = 0, branch
    while cur is not None:
        n, cur = n + 1, prev[cur]
    return n


@pytest.mark.parametrize("md", [m for m in CATALOG if m.rs.type_label in "DE" and m.rs.rank >= 4],
                         ids=lambda m: m.space_id)
def test_k_invariant_diagrammatic(md):
    assert k_invariant(md) == _to_branch(md)


@pytest.mark.parametrize("md", CATALOG, ids=IDS)
def test_root_set_identities(md):
    rs = md.rs
    for d in smooth_schubert_varieties(md):
        sc = schubert_class(md, d)
        nw = set(sc.delta_nw)
        assert nw == {r for r in rs.supported_on(d.nodes) if r[md.gamma - 1] == 1}
        # independent: zero coefficient outside delta
        assert nw == {r for r in md.m_roots
                      if all(c == 0 for i, c in enumerate(r) if i + 1 not in d.nodes)}
        assert set(sc.delta_m) == set(md.m_roots)
        assert nw | set(sc.delta_n) >= set(md.m_roots)
        assert not nw & set(sc.delta_n)
        assert set(sc.delta_mw) == {r for r in sc.delta_n if r[md.gamma - 1] == 0}
        assert sc.k == len(nw)


@pytest.mark.parametrize("md", CATALOG, ids=IDS)
def test_stabilizer_recovers_delta(md):
    for d in smooth_schubert_varieties(md):
        stab = stabilizer_nodes(md, d)
        assert d.nodes <= stab


def test_maximal_linear():
    md = marked("A", 5, 3)
    assert not is_maximal_linear(md, subdiagram(md, [3]))
    assert is_maximal_linear(md, subdiagram(md, [1, 2, 3]))
    assert containing_chain(md, subdiagram(md, [3])).nodes in ({2, 3}, {3, 4})
    assert containing_chain(md, subdiagram(md, [3, 4, 5])) is None
    with pytest.raises(WrongType):
        is_maximal_linear(md, subdiagram(md, [2, 3, 4]))
    c4 = marked("C", 4, 4)
    assert is_maximal_linear(c4, subdiagram(c4, [4]))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(CATALOG), st.data())
def test_maximal_iff_no_chain(md, data):
    d = data.draw(st.sampled_from(smooth_schubert_varieties(md)))
    if d.marked_type == LINEAR_A:
        assert is_maximal_linear(md, d) == (containing_chain(md, d) is None)


def test_a3_middle_node_types():
    md = marked("A", 3, 2)
    got = {tuple(d.sorted_nodes): d.marked_type for d in smooth_schubert_varieties(md)}
    assert got == {(2,): LINEAR_A, (1, 2): LINEAR_A, (2, 3): LINEAR_A, (1, 2, 3): MIDDLE_A}
    assert schubert_class(md, subdiagram(md, [2])).k == 1
