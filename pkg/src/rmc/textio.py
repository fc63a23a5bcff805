"""Line-oriented text format for automata, transducers and counter automata.

    # comment
    kind dfa|nfa|weak-buchi|counter
    arity 2
    alphabet a/a a/b b/a b/b
    states 3
    initial 0
    accepting 2
    dimension 1                # counter kind only
    acceptance weak-buchi      # optional: counter kind over infinite words
    trans 0 a/b 1 +1           # increments only for counter kind

Arity-2 models come back as transducers.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .automata import Alphabet, Automaton, Kind
from .counters import CounterAutomaton
from .errors import ParseError
from .transducer import Transducer

Model = Union[Automaton, Transducer, CounterAutomaton]

KINDS = ("dfa", "nfa", "weak-buchi", "counter")
_SINGLE = ("kind", "arity", "alphabet", "states", "initial", "accepting", "dimension", "acceptance")


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise ParseError(lineno, f"{what} must be an integer, got {tok!r}") from None
    if v < 0:
        raise ParseError(lineno, f"{what} must be nonnegative")
    return v


def parse_text(text: str) -> Automaton | CounterAutomaton:
    """Parse one model; every error names the offending line."""
    seen: dict[str, tuple[int, list[str]]] = {}
    trans: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        if key == "trans":
            trans.append((lineno, rest))
        elif key in _SINGLE:
            if key in seen:
                raise ParseError(lineno, f"duplicate directive {key!r} (first on line {seen[key][0]})")
            seen[key] = (lineno, rest)
        else:
            raise ParseError(lineno, f"unknown directive {key!r}")

    last = max([ln for ln, _ in seen.values()] + [ln for ln, _ in trans] + [1])

    def need(key: str) -> tuple[int, list[str]]:
        if key not in seen:
            raise ParseError(last, f"missing directive {key!r}")
        return seen[key]

    ln, args = need("kind")
    if len(args) != 1 or args[0] not in KINDS:
        raise ParseError(ln, f"kind must be one of {', '.join(KINDS)}")
    kind = args[0]
    ln, args = need("arity")
    if len(args) != 1:
        raise ParseError(ln, "arity takes one integer")
    arity = _int(args[0], ln, "arity")
    if arity < 1:
        raise ParseError(ln, "arity must be at least 1")
    ln, args = need("alphabet")
    if not args:
        raise ParseError(ln, "empty alphabet")
    for sym in args:
        if sym.count("/") != arity - 1:
            raise ParseError(ln, f"symbol {sym!r} does not have {arity} tracks")
    try:
        alpha = Alphabet(tuple(args), arity)
    except ValueError as exc:
        raise ParseError(ln, str(exc)) from None
    ln, args = need("states")
    if len(args) != 1:
        raise ParseError(ln, "states takes one integer")
    n = _int(args[0], ln, "state count")

    def state_list(key: str) -> list[int]:
        if key not in seen:
            return []
        ln, args = seen[key]
        out = []
        for tok in args:
            q = _int(tok, ln, "state")
            if q >= n:
                raise ParseError(ln, f"state {q} out of range 0..{n - 1}")
            out.append(q)
        return out

    initial = state_list("initial")
    accepting = state_list("accepting")
    dim = None
    if "dimension" in seen:
        ln, args = seen["dimension"]
        if kind != "counter":
            raise ParseError(ln, "dimension is only for the counter kind")
        if len(args) != 1:
            raise ParseError(ln, "dimension takes one integer")
        dim = _int(args[0], ln, "dimension")
        if dim < 1:
            raise ParseError(ln, "dimension must be at least 1")
    elif kind == "counter":
        raise ParseError(last, "counter kind needs a dimension directive")
    co_buchi = False
    omega = kind == "weak-buchi"
    if "acceptance" in seen:
        ln, args = seen["acceptance"]
        allowed = {"counter": ("finite", "weak-buchi"), "weak-buchi": ("buchi", "co-buchi")}.get(kind, ())
        if len(args) != 1 or args[0] not in allowed:
            raise ParseError(ln, f"acceptance for kind {kind} must be one of {', '.join(allowed) or '(none)'}")
        co_buchi = args[0] == "co-buchi"
        omega = omega or args[0] == "weak-buchi"
    akind = Kind.WEAK_BUCHI if omega else Kind.FINITE_WORD

    edges = []
    for ln, args in trans:
        want = 4 if kind == "counter" else 3
        if len(args) != want:
            form = "trans q sym q' +c1,...,cn" if kind == "counter" else "trans q sym q'"
            raise ParseError(ln, f"expected {form}")
        p = _int(args[0], ln, "state")
        q = _int(args[2], ln, "state")
        for x in (p, q):
            if x >= n:
                raise ParseError(ln, f"state {x} out of range 0..{n - 1}")
        sym = args[1]
        if sym.count("/") != arity - 1:
            raise ParseError(ln, f"symbol {sym!r} does not have {arity} tracks")
        if sym not in alpha.index:
            raise ParseError(ln, f"symbol {sym!r} not in the alphabet")
        s = alpha.index[sym]
        if kind == "counter":
            inc = args[3]
            if not inc.startswith("+"):
                raise ParseError(ln, "increments are written +c1,...,cn")
            vec = tuple(_int(x, ln, "increment") for x in inc[1:].split(","))
            if len(vec) != dim:
                raise ParseError(ln, f"increment has {len(vec)} entries, dimension is {dim}")
            edges.append((p, s, vec, q))
        else:
            edges.append((p, s, q))

    if kind == "counter":
        return CounterAutomaton(alpha, dim, n, initial, accepting, edges, akind)
    a = Automaton(alpha, n, initial, accepting, edges, akind, co_buchi)
    if kind == "dfa" and not a.deterministic:
        raise ParseError(seen["kind"][0], "kind dfa but the automaton is not deterministic")
    return a


def parse_model(source: str | Path) -> Model:
    """Read a model file. Arity-2 finite or weak automata become transducers."""
    text = Path(source).read_text()
    m = parse_text(text)
    if isinstance(m, Automaton) and m.alphabet.arity == 2:
        return Transducer(m)
    return m


def emit_text(model: Model, comment: str | None = None) -> str:
    if isinstance(model, Transducer):
        model = model.inner
    lines = [f"# {c}" for c in (comment or "").splitlines()]
    counter = isinstance(model, CounterAutomaton)
    if counter:
        kind = "counter"
    elif model.kind is Kind.WEAK_BUCHI:
        kind = "weak-buchi"
    else:
        kind = "dfa" if model.deterministic else "nfa"
    lines += [
        f"kind {kind}",
        f"arity {model.alphabet.arity}",
        "alphabet " + " ".join(model.alphabet.symbols),
        f"states {model.n}",
        "initial " + " ".join(map(str, sorted(model.initial))),
        "accepting " + " ".join(map(str, sorted(model.accepting))),
    ]
    sym = model.alphabet.symbols
    if counter:
        lines.append(f"dimension {model.dim}")
        if model.kind is Kind.WEAK_BUCHI:
            lines.append("acceptance weak-buchi")
        for p, s, v, q in sorted(model.transitions):
            lines.append(f"trans {p} {sym[s]} {q} +{','.join(map(str, v))}")
    else:
        if model.co_buchi:
            lines.append("acceptance co-buchi")
        for p, s, q in model.edges():
            lines.append(f"trans {p} {sym[s]} {q}")
    return "\n".join(line.rstrip() for line in lines) + "\n"
