import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from oracles import lasso_accepts, lasso_language, lassos
from strategies import alphabet, weak_dbas, weak_nbas
from rmc.automata import Alphabet, Automaton, BoolOp, Kind, is_empty
from rmc.errors import NotDeterministic, NotWeak, NotWeakResult
from rmc.weak import (
    accepts_lasso,
    boolean_weak,
    complement_weak,
    determinize_weak,
    find_lasso,
    is_inherently_weak,
    is_weak,
    minimize_weak,
    omega_language_subset,
    weak_canonical,
    weaken,
)

W = Kind.WEAK_BUCHI
AB = Alphabet.of("a", "b")
A, B = 0, 1


def sigma_omega():
    return Automaton(AB, 1, [0], [0], [(0, A, 0), (0, B, 0)], W)


def finitely_many_a():
    return Automaton(AB, 2, [0], [1], [(0, A, 0), (0, B, 0), (0, B, 1), (1, B, 1)], W)


def at_most_one_a(extra_states=False):
    if not extra_states:
        return Automaton(AB, 2, [0], [0, 1], [(0, B, 0), (0, A, 1), (1, B, 1)], W)
    # same language, with a duplicated b-loop before the a
    return Automaton(AB, 4, [0], [0, 1, 2, 3],
                     [(0, B, 1), (1, B, 0), (0, A, 2), (1, A, 3), (2, B, 3), (3, B, 2)], W)


# -- examples ---------------------------------------------------------------


def test_accepting_self_loop_is_weak():
    a = Automaton(AB, 1, [0], [0], [(0, A, 0)], W)
    assert is_weak(a) and is_inherently_weak(a)


def test_mixed_component_with_rejecting_cycle_is_not_inherently_weak():
    # p accepting, q not; the b-loop on q avoids p
    a = Automaton(AB, 2, [0], [0], [(0, A, 1), (1, A, 0), (1, B, 1)], W)
    assert not is_weak(a)
    assert not is_inherently_weak(a)


def test_mixed_component_without_rejecting_cycle_is_inherently_weak():
    a = Automaton(AB, 2, [0], [0], [(0, A, 1), (1, A, 0)], W)
    assert not is_weak(a)
    assert is_inherently_weak(a)
    w = weaken(a)
    assert is_weak(w) and w.accepting == {0, 1}


def test_weaken_refuses_non_inherently_weak():
    a = Automaton(AB, 2, [0], [0], [(0, A, 1), (1, A, 0), (1, B, 1)], W)
    with pytest.raises(NotWeak):
        weaken(a)


def test_finitely_many_a_determinizes_to_non_inherently_weak():
    d = determinize_weak(finitely_many_a())
    assert d.deterministic and d.co_buchi
    assert not is_inherently_weak(d)
    with pytest.raises(NotWeakResult) as info:
        weak_canonical(finitely_many_a())
    assert info.value.automaton.co_buchi


def test_deterministic_input_is_returned_as_is():
    a = at_most_one_a()
    assert determinize_weak(a) is a


def test_canonical_forms_identical_for_equal_languages():
    a, b = at_most_one_a(), at_most_one_a(extra_states=True)
    assert minimize_weak(a) == minimize_weak(b)
    assert minimize_weak(minimize_weak(b)) == minimize_weak(b)


def test_minimize_weak_preconditions():
    with pytest.raises(NotDeterministic):
        minimize_weak(finitely_many_a())
    mixed = Automaton(AB, 2, [0], [0], [(0, A, 1), (1, A, 0)], W)
    with pytest.raises(NotWeak):
        minimize_weak(mixed)


def test_complement_examples():
    assert is_empty(complement_weak(sigma_omega()))[0]
    a = minimize_weak(at_most_one_a())
    assert complement_weak(complement_weak(a)) == a
    c = complement_weak(a)
    assert c.accepts_lasso("aa", "b") and not c.accepts_lasso("a", "b")


def test_subset_examples():
    a = at_most_one_a()
    assert omega_language_subset(a, a) == (True, None)
    ok, w = omega_language_subset(sigma_omega(), finitely_many_a())
    assert not ok
    assert lasso_accepts(sigma_omega(), w.stem, w.loop)
    assert not lasso_accepts(finitely_many_a(), w.stem, w.loop)
    assert w.loop == (A,)
    assert omega_language_subset(at_most_one_a(), finitely_many_a()) == (True, None)


def test_find_lasso_shortest_stem_then_loop():
    a = Automaton(AB, 3, [0], [2], [(0, A, 1), (1, B, 2), (2, A, 1), (0, B, 2), (2, B, 2)], W)
    w = find_lasso(a)
    assert w.stem == (B,) and w.loop == (B,)


def test_accepts_lasso_rejects_empty_loop():
    with pytest.raises(ValueError):
        accepts_lasso(sigma_omega(), (A,), ())


# -- properties -------------------------------------------------------------


@given(weak_nbas())
def test_determinize_weak_keeps_lassos(a):
    d = determinize_weak(a)
    assert d.deterministic
    for u, v in lassos(len(a.alphabet), 3, 3):
        assert lasso_accepts(d, u, v) == lasso_accepts(a, u, v)


@given(weak_nbas())
def test_weaken_after_inherent_weakness_keeps_lassos(a):
    d = determinize_weak(a)
    assume(is_inherently_weak(d))
    w = weaken(d) if d.co_buchi or not is_weak(d) else d
    assert is_weak(w)
    assert lasso_language(w, 3, 3) == lasso_language(a, 3, 3)


@given(weak_dbas())
def test_accepts_lasso_matches_oracle(a):
    for u, v in lassos(len(a.alphabet), 3, 3):
        assert accepts_lasso(a, u, v) == lasso_accepts(a, u, v)


@given(weak_dbas())
def test_minimize_weak_keeps_lassos_and_is_canonical(a):
    m = minimize_weak(a)
    assert is_weak(m) and m.deterministic
    assert lasso_language(m, 4, 4) == lasso_language(a, 4, 4)
    assert minimize_weak(m) == m


@given(weak_dbas())
def test_complement_flips_every_lasso(a):
    c = complement_weak(a)
    for u, v in lassos(len(a.alphabet), 4, 3):
        assert lasso_accepts(c, u, v) != lasso_accepts(a, u, v)


@given(st.data())
def test_boolean_weak_matches_lasso_oracle(data):
    alpha = data.draw(st.integers(1, 2).map(alphabet))
    a, b = data.draw(weak_dbas(alpha)), data.draw(weak_dbas(alpha))
    ops = {
        BoolOp.UNION: lambda x, y: x or y,
        BoolOp.INTERSECTION: lambda x, y: x and y,
        BoolOp.DIFFERENCE: lambda x, y: x and not y,
    }
    for op, f in ops.items():
        r = boolean_weak(op, a, b)
        for u, v in lassos(len(alpha), 3, 3):
            assert lasso_accepts(r, u, v) == f(lasso_accepts(a, u, v), lasso_accepts(b, u, v))


@settings(max_examples=150)
@given(st.data())
def test_subset_answer_and_witness(data):
    alpha = data.draw(st.integers(1, 2).map(alphabet))
    a, b = data.draw(weak_nbas(alpha, 4)), data.draw(weak_nbas(alpha, 4))
    # either side may lack a weak deterministic form
    ok, w = omega_language_subset(a, b)
    if ok:
        for u, v in lassos(len(alpha), 3, 3):
            assert not lasso_accepts(a, u, v) or lasso_accepts(b, u, v)
    else:
        assert lasso_accepts(a, w.stem, w.loop) and not lasso_accepts(b, w.stem, w.loop)


@given(weak_nbas())
def test_find_lasso_agrees_with_emptiness(a):
    w = find_lasso(a)
    words = lasso_language(a, 3, 3)
    if w is None:
        assert not words
    else:
        assert lasso_accepts(a, w.stem, w.loop)
