import pytest
from hypothesis import given

from strategies import counter_automata, nfas, transducers, weak_dbas
from rmc.automata import Automaton, Kind
from rmc.builders import affine_relation, initial_token_ring, token_ring
from rmc.counters import CounterAutomaton
from rmc.errors import ParseError
from rmc.textio import emit_text, parse_model, parse_text
from rmc.transducer import Transducer
from rmc.weak import determinize_weak

TOKEN_RING_TEXT = """\
# token passing step
kind nfa
arity 2
alphabet N/N N/T T/N T/T
states 4
initial 0
accepting 2
trans 0 N/N 0
trans 0 T/N 1
trans 0 N/T 3
trans 1 N/T 2
trans 2 N/N 2
trans 3 N/N 3
trans 3 T/N 2
"""


def back(model):
    m = parse_text(emit_text(model))
    return Transducer(m) if isinstance(m, Automaton) and m.alphabet.arity == 2 else m


def test_round_trip_builders():
    for model in (token_ring(), initial_token_ring(), affine_relation(73, msb_first=True)):
        assert back(model) == model


def test_emitted_token_ring(tmp_path):
    text = emit_text(token_ring(), "token passing step")
    assert text.startswith("# token passing step\nkind ")
    f = tmp_path / "t.txt"
    f.write_text(text)
    assert parse_model(f) == token_ring()


def test_hand_written_file_parses(tmp_path):
    f = tmp_path / "ring.txt"
    f.write_text(TOKEN_RING_TEXT)
    t = parse_model(f)
    assert isinstance(t, Transducer) and t.n == 4
    assert t.inner.accepts(["T/N", "N/T"])


def test_counter_and_co_buchi_directives():
    ac = CounterAutomaton(initial_token_ring().alphabet, 2, 2, [0], [1], [(0, 1, (1, 0), 1), (1, 0, (0, 3), 1)], Kind.WEAK_BUCHI)
    text = emit_text(ac)
    assert "dimension 2" in text and "acceptance weak-buchi" in text and "trans 1 N 1 +0,3" in text
    assert parse_text(text) == ac
    fin = Automaton(initial_token_ring().alphabet, 2, [0], [1], [(0, 0, 0), (0, 0, 1), (1, 0, 1)], Kind.WEAK_BUCHI)
    d = determinize_weak(fin)
    assert d.co_buchi and "acceptance co-buchi" in emit_text(d)
    assert parse_text(emit_text(d)) == d


@given(nfas())
def test_round_trip_nfas(a):
    assert parse_text(emit_text(a)) == a


@given(weak_dbas())
def test_round_trip_weak(a):
    assert parse_text(emit_text(a)) == a


@given(transducers())
def test_round_trip_transducers(t):
    assert back(t) == t


@given(counter_automata())
def test_round_trip_counters(ac):
    assert parse_text(emit_text(ac)) == ac


def _with(line_no, new):
    lines = TOKEN_RING_TEXT.splitlines()
    lines[line_no - 1] = new
    return "\n".join(lines) + "\n"


@pytest.mark.parametrize("line, new, msg", [
    (2, "kind pushdown", "kind must be one of"),
    (4, "alphabet N/N N T/N T/T", "does not have 2 tracks"),
    (5, "states many", "must be an integer"),
    (6, "initial 7", "out of range"),
    (8, "trans 0 N/N", "expected trans q sym q'"),
    (9, "trans 0 X/Y 1", "not in the alphabet"),
    (10, "trans 0 N/T/N 3", "does not have 2 tracks"),
    (11, "transition 1 N/T 2", "unknown directive"),
    (12, "states 4", "duplicate directive"),
    (3, "arity 0", "at least 1"),
])
def test_parse_errors_name_the_line(line, new, msg):
    with pytest.raises(ParseError) as info:
        parse_text(_with(line, new))
    assert info.value.line == line
    assert msg in str(info.value)
    assert str(info.value).startswith(f"line {line}: ")


def test_missing_and_misplaced_directives():
    with pytest.raises(ParseError, match="missing directive 'states'"):
        parse_text("kind nfa\narity 1\nalphabet a\n")
    with pytest.raises(ParseError, match="only for the counter kind"):
        parse_text("kind nfa\narity 1\nalphabet a\nstates 1\ndimension 1\n")
    with pytest.raises(ParseError, match="needs a dimension"):
        parse_text("kind counter\narity 1\nalphabet a\nstates 1\n")
    with pytest.raises(ParseError, match="increment has 1 entries"):
        parse_text("kind counter\narity 1\nalphabet a\nstates 1\ndimension 2\ntrans 0 a 0 +1\n")
    with pytest.raises(ParseError, match="not deterministic"):
        parse_text("kind dfa\narity 1\nalphabet a\nstates 2\ntrans 0 a 0\ntrans 0 a 1\n")
