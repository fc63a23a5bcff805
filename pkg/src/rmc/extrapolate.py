"""Guessing the limit of a growing sequence by letting runs skip back over increments.

Every added edge stands for "go through this many extra increments"; the
counter versions record that number on the edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .automata import Automaton, Kind, determinize, minimize
from .counters import CounterAutomaton, counter_zero, counterless
from .errors import TooFewIncrements
from .increments import GrowDecomposition
from .weak import weak_canonical


@dataclass(frozen=True, order=True)
class AddedEdge:
    source: int
    symbol: int
    target: int
    count: int


def _jumps(grow: GrowDecomposition):
    """(q, a, q', j): a move from the head or I0 into increment j >= 1."""
    a = grow.automaton
    for q in sorted(grow.head | grow.increments[0]):
        for s, (r,) in a.succ(q).items():
            j = grow.index_in(r)
            if j is not None and j >= 1:
                yield q, s, r, j


def _require(grow: GrowDecomposition) -> None:
    if grow.k < 2:
        raise TooFewIncrements(f"need at least two increments, got {grow.k}")


def finite_added_edges(grow: GrowDecomposition) -> list[AddedEdge]:
    _require(grow)
    out = set()
    for q, s, r, j in _jumps(grow):
        for l in range(j):
            out.add(AddedEdge(q, s, grow.iso(r, l), j - l))
    return sorted(out)


def extrapolate_finite_counter(origin: Automaton, grow: GrowDecomposition) -> CounterAutomaton:
    """One-counter automaton; the counter says how many increments were skipped."""
    edges = [(p, s, (0,), q) for p, s, q in origin.transitions]
    edges += [(e.source, e.symbol, (e.count,), e.target) for e in finite_added_edges(grow)]
    return CounterAutomaton(origin.alphabet, 1, origin.n, origin.initial, origin.accepting, edges, origin.kind)


def extrapolate_finite(origin: Automaton, grow: GrowDecomposition) -> Automaton:
    return counterless(extrapolate_finite_counter(origin, grow))


def naive_weak(origin: Automaton, grow: GrowDecomposition) -> Automaton:
    """The finite-word rule applied as is to a weak automaton (unsound: new loops may accept)."""
    return extrapolate_finite(origin, grow)


def _copy_ids(origin: Automaton, grow: GrowDecomposition) -> dict[int, int]:
    return {q: origin.n + k for k, q in enumerate(sorted(grow.increments[0]))}


def weak_added_edges(origin: Automaton, grow: GrowDecomposition) -> list[AddedEdge]:
    """Jump edges of the weak construction; copy states are numbered after ``origin``."""
    _require(grow)
    copy = _copy_ids(origin, grow)
    i0 = grow.increments[0]
    out = set()
    for q, s, r, j in _jumps(grow):
        sources = [q, copy[q]] if q in i0 else [q]
        for src in sources:
            for l in range(1, j):
                out.add(AddedEdge(src, s, grow.iso(r, l), j - l))
            out.add(AddedEdge(src, s, copy[grow.iso(r, 0)], j))
    return sorted(out)


def extrapolate_weak_counter(origin: Automaton, grow: GrowDecomposition) -> CounterAutomaton:
    """Run-bounded weak counter automaton with a nonaccepting copy of I0."""
    _require(grow)
    copy = _copy_ids(origin, grow)
    i0 = grow.increments[0]
    edges = [(p, s, (0,), q) for p, s, q in origin.transitions]
    for q in sorted(i0):
        for s, (r,) in origin.succ(q).items():
            # copy of I0 with its moves to other increments and the tail-end
            edges.append((copy[q], s, (0,), copy[r] if r in i0 else r))
    edges += [(e.source, e.symbol, (e.count,), e.target) for e in weak_added_edges(origin, grow)]
    return CounterAutomaton(
        origin.alphabet, 1, origin.n + len(copy), origin.initial, origin.accepting, edges, origin.kind
    )


def extrapolate_weak(origin: Automaton, grow: GrowDecomposition) -> Automaton:
    return counterless(extrapolate_weak_counter(origin, grow))


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Extrapolation:
    origin: Automaton
    grow: GrowDecomposition
    counted: CounterAutomaton
    provenance: tuple[AddedEdge, ...] = field(default=())

    @property
    def plain(self) -> Automaton:
        return counterless(self.counted)

    @property
    def zero_layer(self) -> CounterAutomaton:
        return counter_zero(self.origin)

    @cached_property
    def minimized(self) -> Automaton:
        """Deterministic minimal form; weak inputs may raise NotWeakResult."""
        if self.origin.kind is Kind.WEAK_BUCHI:
            return weak_canonical(self.plain)
        return minimize(determinize(self.plain))

    def provenance_text(self) -> str:
        alpha = self.origin.alphabet
        lines = [f"added {e.source} {alpha.symbols[e.symbol]} {e.target} +{e.count}" for e in self.provenance]
        return "\n".join(lines) + ("\n" if lines else "")


def extrapolate(origin: Automaton, grow: GrowDecomposition) -> Extrapolation:
    if origin.kind is Kind.WEAK_BUCHI:
        counted = extrapolate_weak_counter(origin, grow)
        prov = weak_added_edges(origin, grow)
    else:
        counted = extrapolate_finite_counter(origin, grow)
        prov = finite_added_edges(grow)
    return Extrapolation(origin, grow, counted, tuple(prov))


# ---------------------------------------------------------------------------
# ground truth: physically insert i more increments


def insert_increments(origin: Automaton, grow: GrowDecomposition, i: int) -> Automaton:
    """The i-th automaton of the extrapolated sequence, built explicitly.

    New increments J_0..J_{i-1} go between the head and I_0, which becomes
    J_i. Each new one behaves like I_0: moves into I_g lead to J_{p+g}.
    """
    if i < 0:
        raise ValueError("i must be nonnegative")
    if i == 0:
        return origin
    if grow.k < 1:
        raise TooFewIncrements("nothing to insert")
    i0 = sorted(grow.increments[0])
    size = len(i0)
    pos = {q: k for k, q in enumerate(i0)}
    base = origin.n

    def new_state(p: int, q0: int) -> int:
        # state of J_p (p < i) corresponding to q0 in I_0
        return base + p * size + pos[q0]

    def at(pidx: int, q0: int) -> int:
        """State of J_pidx corresponding to q0 in I_0."""
        if pidx < i:
            return new_state(pidx, q0)
        return grow.increment_iso[pidx - i][q0]

    trans = []
    for p, s, q in origin.transitions:
        if p in grow.head:
            x = grow.index_in(q)
            if x is not None:
                q = at(x, grow.to_i0(q))
        trans.append((p, s, q))
    for pidx in range(i):
        for q0 in i0:
            for s, (r,) in origin.succ(q0).items():
                g = grow.index_in(r)
                if g is not None:
                    tgt = at(pidx + g, grow.to_i0(r))
                else:
                    tgt = r
                trans.append((new_state(pidx, q0), s, tgt))
    acc = set(origin.accepting)
    for pidx in range(i):
        for q0 in i0:
            if q0 in origin.accepting:
                acc.add(new_state(pidx, q0))
    init = set()
    for q in origin.initial:
        x = grow.index_in(q)
        init.add(at(x, grow.to_i0(q)) if x is not None else q)
    return Automaton(origin.alphabet, base + i * size, init, acc, trans, origin.kind)
