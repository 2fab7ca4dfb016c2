from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from hssrigidity.diagram import catalog, marked
from hssrigidity.errors import NonDominantWeight, NonReducedWord, NotCominuscule
from hssrigidity.rootsystem import build_root_system, is_positive
from hssrigidity.schur import schur_dim
from hssrigidity.weyl import (
    apply, apply_inverse, enumerate_ideals, enumerate_WP, enumerate_wp_bfs,
    inversion_set, is_abelian, length_profile, longest_in_parabolic, m_roots,
    make_elt, weyl_dim,
)
from tests.oracles import fundamental_weights, hook_content_dim

SPACES = [(md.rs.type_label, md.rs.rank, md.gamma) for md in catalog(7)]


def test_apply_examples():
    a2 = build_root_system("A", 2)
    assert apply(a2, (1, 2), (1, 0)) == (0, 1)
    assert apply_inverse(a2, (1, 2), (0, 1)) == (1, 0)
    assert inversion_set(a2, (1, 2)) == {(1, 0), (1, 1)}


def test_d_type_word():
    d4 = build_root_system("D", 4)
    inv = inversion_set(d4, (1, 2, 3, 4, 2, 1))
    assert len(inv) == 6
    assert all(r[0] == 1 for r in inv)


def test_non_reduced():
    a2 = build_root_system("A", 2)
    with pytest.raises(NonReducedWord):
        inversion_set(a2, (1, 1))
    with pytest.raises(NonReducedWord):
        inversion_set(a2, (1, 2, 1, 2))


def test_not_cominuscule():
    with pytest.raises(NotCominuscule):
        enumerate_WP(build_root_system("B", 3), 2)
    with pytest.raises(NotCominuscule):
        enumerate_WP(build_root_system("E", 6), 2)


def _wp_size(t, n, g):
    if t == "A":
        return comb(n + 1, g)
    if t == "B":
        return 2 * n
    if t == "C":
        return 2 ** n
    if t == "D":
        return 2 * n if g == 1 else 2 ** (n - 1)
    return {6: 27, 7: 56}[n]


@pytest.mark.parametrize("space", SPACES, ids=lambda s: f"{s[0]}{s[1]}:{s[2]}")
def test_wp_size_and_profile(space):
    md = marked(*space)
    reps = md.coset_reps
    assert len(reps) == _wp_size(*space)
    prof = length_profile(reps)
    assert prof == prof[::-1]
    assert len(prof) == md.dim + 1
    assert len({r.elt.inversions for r in reps}) == len(reps)


@pytest.mark.parametrize("space", [s for s in SPACES if s[1] <= 5])
def test_bfs_agrees_with_ideals(space):
    rs = build_root_system(space[0], space[1])
    bfs = {frozenset(r.ideal) for r in enumerate_wp_bfs(rs, space[2])}
    assert bfs == set(enumerate_ideals(rs, space[2]))


def test_grassmannian_profile_is_gaussian_binomial():
    # coefficients of [4 choose 2]_q
    assert length_profile(marked("A", 3, 2).coset_reps) == [1, 1, 2, 1, 1]


@pytest.mark.parametrize("space", SPACES, ids=lambda s: f"{s[0]}{s[1]}:{s[2]}")
def test_m_abelian(space):
    rs = build_root_system(space[0], space[1])
    assert is_abelian(rs, m_roots(rs, space[2]))


def test_non_abelian_example():
    rs = build_root_system("B", 3)
    assert not is_abelian(rs, m_roots(rs, 2))


@pytest.mark.parametrize("t,n", [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("E", 6)])
def test_longest_element(t, n):
    rs = build_root_system(t, n)
    w0 = longest_in_parabolic(rs, range(1, n + 1))
    assert w0.length == len(rs.positive_roots)
    assert all(not is_positive(apply(rs, w0, rs.simple(j))) for j in range(1, n + 1))


def test_longest_in_sub_parabolic():
    rs = build_root_system("D", 5)
    w = longest_in_parabolic(rs, [2, 3, 4, 5])
    assert w.length == 12


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SPACES), st.data())
def test_inversion_sets_are_ideals(space, data):
    md = marked(*space)
    rep = data.draw(st.sampled_from(md.coset_reps))
    assert make_elt(md.rs, rep.word).inversions == frozenset(rep.ideal)
    assert set(rep.ideal) <= set(md.m_roots)
    for r in rep.ideal:
        assert apply_inverse(md.rs, rep.word, r) in md.rs.root_set
        assert not is_positive(apply_inverse(md.rs, rep.word, r))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.data())
def test_weyl_dim_matches_hook_content(n, data):
    # gl_{n+1} -> sl_{n+1}: highest weight sum (a_i - a_{i+1}) omega_i
    rs = build_root_system("A", n)
    a = sorted(data.draw(st.lists(st.integers(0, 3), min_size=n + 1, max_size=n + 1)), reverse=True)
    om = fundamental_weights(rs)
    wt = [sum((a[i] - a[i + 1]) * om[i][c] for i in range(n)) for c in range(n)]
    got = weyl_dim(rs, rs.positive_roots, range(1, n + 1), wt)
    assert got == hook_content_dim(a, n + 1) == schur_dim(a, n + 1)


def test_weyl_dim_examples():
    rs = build_root_system("E", 6)
    om = fundamental_weights(rs)
    assert weyl_dim(rs, rs.positive_roots, range(1, 7), om[0]) == 27
    assert weyl_dim(rs, rs.positive_roots, range(1, 7), om[1]) == 78
    e7 = build_root_system("E", 7)
    assert weyl_dim(e7, e7.positive_roots, range(1, 8), fundamental_weights(e7)[6]) == 56
    b3 = build_root_system("B", 3)
    assert weyl_dim(b3, b3.positive_roots, range(1, 4), fundamental_weights(b3)[2]) == 8
    assert weyl_dim(rs, [], [], [0] * 6) == 1


def test_weyl_dim_rejects_non_dominant():
    rs = build_root_system("A", 2)
    with pytest.raises(NonDominantWeight):
        weyl_dim(rs, rs.positive_roots, [1, 2], (-1, 0))
