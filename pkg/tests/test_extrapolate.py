import pytest

from families import (
    chain,
    chain_families,
    extrapolation_problems,
    guard_family,
    plus_one_windows,
    token_ring_windows,
)
from oracles import bounded, lasso_accepts, lasso_language
from rmc.automata import Alphabet, Automaton, Kind, language_equal
from rmc.counters import counterless, is_run_bounded, max_increment
from rmc.errors import NotWeakResult, TooFewIncrements
from rmc.extrapolate import (
    AddedEdge,
    extrapolate,
    extrapolate_finite,
    extrapolate_weak,
    finite_added_edges,
    insert_increments,
    naive_weak,
    weak_added_edges,
)
from rmc.increments import GrowDecomposition, decompose
from rmc.weak import accepts_lasso, weak_canonical

AB = Alphabet.of("a", "b")
W = Kind.WEAK_BUCHI


def a_n_b_grow():
    return decompose([chain(AB, (), (0,), (1,), n) for n in (2, 3, 4)])


def at_most(k):
    """Words over a, b with at most k a's, read forever (weak)."""
    trans = [(l, 1, l) for l in range(k + 1)] + [(l, 0, l + 1) for l in range(k)]
    return weak_canonical(Automaton(AB, k + 1, [0], range(k + 1), trans, W))


def test_a_n_b_gains_one_loop():
    g = a_n_b_grow()
    assert finite_added_edges(g) == [AddedEdge(0, 0, 0, 1)]
    ext = extrapolate(g.automaton, g)
    assert ext.provenance_text() == "added 0 a 0 +1\n"
    want = {(0,) * n + (1,) for n in range(4, 9)}
    assert bounded(ext.minimized, 9) == want
    assert max_increment(ext.counted) <= g.diameter


def test_no_forward_jumps_adds_nothing():
    # head 0; I0 = {1} and I1 = {3} are reached from different places, never jumped into
    a = Automaton(AB, 4, [0], [1, 3], [(0, 0, 1), (0, 1, 2), (2, 0, 3)])
    g = GrowDecomposition(a, frozenset({0}), (frozenset({1}), frozenset({3})), frozenset({2}),
                          ({1: 1}, {1: 3}), 0)
    assert finite_added_edges(g) == []
    assert extrapolate_finite(a, g) == a


def test_too_few_increments():
    a = chain(AB, (), (0,), (1,), 2)
    g = decompose([a, a, a])
    with pytest.raises(TooFewIncrements):
        extrapolate(a, g)
    with pytest.raises(TooFewIncrements):
        insert_increments(a, g, 1)
    with pytest.raises(ValueError):
        insert_increments(a, a_n_b_grow(), -1)
    assert insert_increments(a, g, 0) is a


def test_x_a_omega_guard():
    g = decompose([guard_family(k) for k in (2, 3, 4)])
    origin = g.automaton
    x, a = 0, 1
    assert lasso_accepts(naive_weak(origin, g), (x,), (a,))
    assert not lasso_accepts(extrapolate_weak(origin, g), (x,), (a,))
    assert not accepts_lasso(extrapolate_weak(origin, g), (x,), (a,))
    # what the copy construction keeps: x a^j c^omega for any j
    ext = extrapolate(origin, g)
    assert accepts_lasso(ext.minimized, (x,) + (a,) * 9, (2,))
    assert ext.minimized.n == 3


def test_weak_copy_states_follow_the_origin():
    g = decompose([guard_family(k) for k in (2, 3, 4)])
    origin = g.automaton
    edges = weak_added_edges(origin, g)
    assert edges and all(e.count >= 1 for e in edges)
    assert max(max(e.source, e.target) for e in edges) < origin.n + len(g.increments[0])
    assert is_run_bounded(extrapolate(origin, g).counted)


def test_untouched_accepting_cycles_keep_their_lassos():
    # the accepting c-loop is in the tail-end; new edges only loop back over a's
    g = decompose([guard_family(k) for k in (2, 3, 4)])
    ext = extrapolate_weak(g.automaton, g)
    for stem, loop in lasso_language(g.automaton, 4, 2):
        assert lasso_accepts(ext, stem, loop)


def test_not_inherently_weak_extrapolation():
    g = decompose([at_most(k) for k in (1, 2, 3)])
    ext = extrapolate(g.automaton, g)
    with pytest.raises(NotWeakResult):
        ext.minimized


def test_counterless_matches_plain():
    g = a_n_b_grow()
    ext = extrapolate(g.automaton, g)
    assert counterless(ext.counted) == ext.plain
    assert language_equal(ext.plain, extrapolate_finite(g.automaton, g))


# -- ground truth -------------------------------------------------------------


@pytest.mark.parametrize("fam", chain_families(25, seed=11), ids=lambda f: f.name)
def test_finite_chain_families(fam):
    assert extrapolation_problems(fam) == []


@pytest.mark.parametrize("fam", chain_families(12, seed=5, weak=True), ids=lambda f: f.name)
def test_weak_chain_families(fam):
    assert extrapolation_problems(fam) == []


@pytest.mark.parametrize("fam", token_ring_windows() + plus_one_windows(), ids=lambda f: f.name)
def test_sampled_families(fam):
    width = 8 if len(fam.seq[0].alphabet) <= 3 else 6
    assert extrapolation_problems(fam, max_len=width) == []
