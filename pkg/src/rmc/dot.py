"""Graphviz DOT output."""

from __future__ import annotations

from .automata import Automaton, Kind
from .counters import CounterAutomaton
from .increments import GrowDecomposition
from .transducer import Transducer
from .weak import scc_decomposition

# fill colours per decomposition part; increments cycle through the tail of the list
_HEAD = "lightgoldenrod1"
_TAIL = "gray85"
_INCREMENTS = ("lightblue", "palegreen", "lightpink", "plum1", "lightsalmon", "khaki1")


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(model, name: str = "A", grow: GrowDecomposition | None = None) -> str:
    """DOT text for an automaton, transducer or counter automaton.

    Edges between the same two states are merged into one label. With
    ``grow``, states are filled by part (head, increment, tail-end);
    weak automata get their accepting cycles boxed as clusters.
    """
    if isinstance(model, Transducer):
        model = model.inner
    counter = isinstance(model, CounterAutomaton)
    sym = model.alphabet.symbols
    labels: dict[tuple[int, int], list[str]] = {}
    if counter:
        for p, s, v, q in sorted(model.transitions):
            lab = sym[s] if not any(v) else f"{sym[s]} +{','.join(map(str, v))}"
            labels.setdefault((p, q), []).append(lab)
    else:
        for p, s, q in model.edges():
            labels.setdefault((p, q), []).append(sym[s])

    out = [f"digraph {_quote(name)} {{", "  rankdir=LR;", '  node [shape=circle, fontname="Helvetica"];',
           '  edge [fontname="Helvetica"];']
    for i, q in enumerate(sorted(model.initial)):
        out.append(f"  __init{i} [shape=point, label=\"\"];")
        out.append(f"  __init{i} -> {q};")

    def node(q: int) -> str:
        attrs = []
        if q in model.accepting:
            attrs.append("shape=doublecircle")
        if grow is not None:
            part, idx = grow.part(q)
            colour = _HEAD if part == "H" else _TAIL if part == "T" else _INCREMENTS[idx % len(_INCREMENTS)]
            tag = "H" if part == "H" else "T" if part == "T" else f"I{idx}"
            attrs += ["style=filled", f"fillcolor={colour}", f"xlabel={_quote(tag)}"]
        return f"  {q}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";"

    boxed: set[int] = set()
    if not counter and model.kind is Kind.WEAK_BUCHI:
        scc = scc_decomposition(model)
        for c, members in enumerate(scc.members):
            if scc.nontrivial[c] and scc.status[c] == "accepting":
                out.append(f"  subgraph cluster_acc{c} {{")
                out.append('    label="accepting"; style=dashed; color=forestgreen;')
                out += ["  " + node(q) for q in members]
                out.append("  }")
                boxed.update(members)
    for q in range(model.n):
        if q not in boxed:
            out.append(node(q))
    for (p, q), labs in sorted(labels.items()):
        out.append(f"  {p} -> {q} [label={_quote(', '.join(labs))}];")
    out.append("}")
    return "\n".join(out) + "\n"

