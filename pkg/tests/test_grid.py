import pytest
from hypothesis import given, strategies as st

from strategies import perms_of
from webperm import Caps, PreconditionError, SizeError
from webperm import grid as G
from webperm import perms as P

KNOWN_TILDE = {
    1: ["1"], 2: ["12"], 3: ["123"], 4: ["1234", "3412"],
    5: ["12345", "14523", "34125"],
    6: ["123456", "125634", "145236", "341256", "345612", "364512", "534612", "563412"],
}


def test_web3():
    assert sorted(G.web_set(3)) == [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 2, 1)]


@pytest.mark.parametrize("n", range(1, 7))
def test_tilde_web_known(n):
    assert [P.format_word(p) for p in G.tilde_web(n)] == KNOWN_TILDE[n]


@pytest.mark.parametrize("n", range(1, 7))
def test_web_set_is_andre_cycle_permutations(n):
    assert G.web_set(n) == {p for p in P.enumerate_perms(n) if P.is_web(p)}


@pytest.mark.parametrize("n", range(1, 7))
def test_strategies_agree(n):
    idn = P.identity(n)
    assert G.resolve(idn, G.first_maximal) == G.resolve(idn, G.last_maximal)


def test_matching_example():
    assert G.matching((1, 3, 2, 4)) == ((0, 1), (2, 5), (3, 4), (6, 7))
    assert G.matching(P.identity(4)) == G.base_matching(4)


def test_matching_needs_web():
    with pytest.raises(PreconditionError):
        G.matching((3, 1, 2))


def test_crossings_of_identity_and_decreasing():
    assert G.crossings((1, 2, 3)) == {(1, 2), (1, 3), (2, 3)}
    assert G.crossings((3, 2, 1)) == frozenset()


def test_render():
    g = G.GridConfiguration((1, 2), frozenset({(1, 2)}))
    assert g.render() == "~x\nx "


def test_smooth_and_switch_preconditions():
    g = G.GridConfiguration((1, 2, 3))
    with pytest.raises(PreconditionError):
        G.smooth(g, (2, 3))  # not maximal: (1, 3) dominates it
    g2 = G.smooth(g, (1, 3))
    with pytest.raises(PreconditionError):
        G.smooth(g2, (1, 3))
    assert G.switch(g, (1, 3)).sigma == (3, 2, 1)


def test_f_values_and_caps():
    assert [G.f(6, k) for k in range(1, 7)] == [3, 0, 3, 0, 2, 0]
    with pytest.raises(SizeError):
        G.f(6, 1, Caps(max_n=5))
    with pytest.raises(PreconditionError):
        G.f(3, 4)


@pytest.mark.parametrize("n", range(1, 7))
def test_h_of_identity_counts_tilde_web(n):
    assert G.h(P.identity(n)) == len(G.tilde_web(n))
    assert G.h(G.p_transform(P.identity(n), 1)) == len(G.tilde_web(n))


def test_h_vanishes_when_one_moves_to_the_end():
    for n in range(2, 7):
        assert G.h(G.p_transform(P.identity(n), n)) == 0


@given(perms_of(min_n=1, max_n=6))
def test_resolution_leaves_are_distinct_webs(p):
    leaves = G.resolve_leaves(p)
    assert len(leaves) == len(set(leaves))
    assert all(sorted(s) == sorted(p) for s in leaves)


@given(perms_of(min_n=1, max_n=6))
def test_resolved_matching_is_perfect(p):
    m = G.resolved_matching(p)
    ends = sorted(v for c in m for v in c)
    assert ends == list(range(2 * len(p)))


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))))
def test_p_transform_moves_first_letter(nk):
    n, k = nk
    q = G.p_transform(P.identity(n), k)
    assert q[k - 1] == 1 and sorted(q) == list(range(1, n + 1))
