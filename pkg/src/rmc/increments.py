"""Finding the repeated piece ("increment") between successive minimal automata."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .automata import Automaton, Kind, complete, disjoint_union, partition_refine
from .errors import NotCanonical, NotGrowing
from .weak import _loding_colors, scc_decomposition

StateMap = dict[int, int]


def _require_min(a: Automaton) -> None:
    if not a.deterministic:
        raise NotCanonical("expected a minimal deterministic automaton")


def _check_pair(a: Automaton, b: Automaton) -> None:
    _require_min(a)
    _require_min(b)
    if a.alphabet != b.alphabet or a.kind is not b.kind:
        raise NotCanonical("automata differ in alphabet or kind")


def forward_equivalence(a: Automaton, b: Automaton) -> StateMap:
    """Pairs ``(p, q)`` accepting the same language, from one joint minimization."""
    _check_pair(a, b)
    joint, sink = complete(disjoint_union(a, b))
    nsym = len(joint.alphabet)
    table = [[joint.step(q, s) for s in range(nsym)] for q in range(joint.n)]
    if a.kind is Kind.WEAK_BUCHI:
        labels = [c % 2 for c in _loding_colors(joint)]
    else:
        labels = [q in joint.accepting for q in range(joint.n)]
    block = partition_refine(table, nsym, labels)
    left: dict[int, int] = {}
    right: dict[int, int] = {}
    for q in range(a.n):
        if block[q] in left:
            raise NotCanonical("first automaton is not minimal")
        left[block[q]] = q
    for q in range(b.n):
        if block[a.n + q] in right:
            raise NotCanonical("second automaton is not minimal")
        right[block[a.n + q]] = q
    dead = block[sink]
    return {left[k]: right[k] for k in sorted(left) if k in right and k != dead}


def backward_equivalence(a: Automaton, b: Automaton) -> StateMap:
    """Pairs reached by exactly the same words from the initial states.

    Walk the product of the two automata (a missing move on one side counts
    as a dead state). A state is paired when it only ever shows up together
    with one partner. Pairs whose acceptance flags disagree are dropped.
    """
    _check_pair(a, b)
    nsym = len(a.alphabet)
    start = (a.init, b.init)
    seen = {start}
    todo = deque([start])
    while todo:
        p, q = todo.popleft()
        for s in range(nsym):
            p2 = a.step(p, s) if p is not None else None
            q2 = b.step(q, s) if q is not None else None
            if p2 is None and q2 is None:
                continue
            if (p2, q2) not in seen:
                seen.add((p2, q2))
                todo.append((p2, q2))
    left: dict[int, set] = {}
    right: dict[int, set] = {}
    for p, q in seen:
        if p is not None:
            left.setdefault(p, set()).add(q)
        if q is not None:
            right.setdefault(q, set()).add(p)
    out: StateMap = {}
    for p in sorted(left):
        (q,) = left[p] if len(left[p]) == 1 else (None,)
        if q is None or right[q] != {p}:
            continue
        if (p in a.accepting) == (q in b.accepting):
            out[p] = q
    return out


@dataclass(frozen=True)
class Larger:
    """Evidence that ``b`` is incrementally larger than ``a``."""

    forward: StateMap
    backward: StateMap
    q_f: frozenset[int]
    q_b: frozenset[int]
    head: frozenset[int]
    increment: frozenset[int]
    tail: frozenset[int]


def incrementally_larger(a: Automaton, b: Automaton) -> Larger | None:
    ef = forward_equivalence(a, b)
    eb = backward_equivalence(a, b)
    q_f = frozenset(ef)
    q_b = frozenset(range(a.n)) - q_f
    if not q_b <= eb.keys():
        return None
    head = frozenset(eb[q] for q in q_b)
    tail = frozenset(ef[q] for q in q_f) - head
    incr = frozenset(range(b.n)) - head - tail
    return Larger(ef, eb, q_f, q_b, head, incr, tail)


def is_incrementally_larger(a: Automaton, b: Automaton) -> bool:
    return incrementally_larger(a, b) is not None


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GrowDecomposition:
    """Head, increments I_0..I_{k-1} and tail-end of the last automaton of a growing sequence.

    ``increment_iso[l]`` maps I_0 onto I_l. The ``*_from_prev`` maps relate the
    parts of the previous automaton in the sequence to this one.
    """

    automaton: Automaton
    head: frozenset[int]
    increments: tuple[frozenset[int], ...]
    tail_end: frozenset[int]
    increment_iso: tuple[StateMap, ...]
    diameter: int
    head_from_prev: StateMap = field(default_factory=dict)
    tail_from_prev: StateMap = field(default_factory=dict)
    increments_from_prev: tuple[StateMap, ...] = ()

    @property
    def k(self) -> int:
        return len(self.increments)

    def part(self, q: int) -> tuple[str, int]:
        """``("H", 0)``, ``("I", l)`` or ``("T", 0)``."""
        if q in self.head:
            return ("H", 0)
        for l, inc in enumerate(self.increments):
            if q in inc:
                return ("I", l)
        return ("T", 0)

    def index_in(self, q: int) -> int | None:
        kind, l = self.part(q)
        return l if kind == "I" else None

    def to_i0(self, q: int) -> int:
        """The I_0 state corresponding to ``q`` in some increment."""
        l = self.index_in(q)
        if l is None:
            raise ValueError(f"state {q} is not in an increment")
        inv = {v: u for u, v in self.increment_iso[l].items()}
        return inv[q]

    def iso(self, q: int, l: int) -> int:
        """The state of I_l corresponding to increment state ``q``."""
        return self.increment_iso[l][self.to_i0(q)]

    def dump(self) -> str:
        lines = [f"grow states={self.automaton.n} increments={self.k} diameter={self.diameter}"]
        for q in range(self.automaton.n):
            kind, l = self.part(q)
            lines.append(f"{q} " + {"H": "head", "T": "tail-end"}.get(kind, f"I{l}"))
        i0 = sorted(self.increments[0]) if self.increments else []
        for l in range(1, self.k):
            pairs = " ".join(f"{q}->{self.increment_iso[l][q]}" for q in i0)
            lines.append(f"iso I0->I{l}: {pairs}")
        return "\n".join(lines) + "\n"


def _compose_maps(*maps: StateMap) -> StateMap:
    out: StateMap = {}
    if not maps:
        return out
    for x, y in maps[0].items():
        for m in maps[1:]:
            if y not in m:
                break
            y = m[y]
        else:
            out[x] = y
    return out


def _is_iso(a: Automaton, src: frozenset[int], dst: frozenset[int], m: StateMap) -> bool:
    if set(m) != set(src) or set(m.values()) != set(dst) or len(set(m.values())) != len(m):
        return False
    for q in src:
        if (q in a.accepting) != (m[q] in a.accepting):
            return False
        for s in range(len(a.alphabet)):
            r, r2 = a.step(q, s), a.step(m[q], s)
            inside, inside2 = r in src, r2 in dst
            if inside != inside2:
                return False
            if inside and m[r] != r2:
                return False
    return True


def _decompose(seq: Sequence[Automaton]) -> tuple[GrowDecomposition, list[Larger]]:
    if len(seq) < 2:
        raise NotGrowing(0, "need at least two automata")
    steps: list[Larger] = []
    for j in range(len(seq) - 1):
        lg = incrementally_larger(seq[j], seq[j + 1])
        if lg is None:
            raise NotGrowing(j + 1, "not incrementally larger")
        steps.append(lg)
    # the head increment of each step is the backward image of the previous one
    for j in range(1, len(steps)):
        prev_inc = steps[j - 1].increment
        eb = steps[j].backward
        if not prev_inc <= eb.keys() or frozenset(eb[q] for q in prev_inc) != steps[j].increment:
            raise NotGrowing(j + 1, "head increment is not the backward image of the previous one")
    last = seq[-1]
    lg = steps[-1]
    s = len(steps)
    i0 = lg.increment
    if not i0:
        for j, st in enumerate(steps):
            if st.increment:
                raise NotGrowing(j + 1, "increment vanished")
        head = lg.head
        tail = frozenset(range(last.n)) - head
        return GrowDecomposition(last, head, (), tail, (), 0, head_from_prev=dict(lg.backward)), steps
    increments = [i0]
    isos: list[StateMap] = [{q: q for q in i0}]
    for l in range(1, s):
        src_step = s - l  # steps[src_step - 1] produced the increment sitting in seq[src_step]
        src_inc = steps[src_step - 1].increment
        fchain = _compose_maps({q: q for q in src_inc}, *(steps[t].forward for t in range(src_step, s)))
        bchain = _compose_maps({q: q for q in src_inc}, *(steps[t].backward for t in range(src_step, s)))
        if len(fchain) != len(src_inc) or len(bchain) != len(src_inc):
            raise NotGrowing(s, f"tail increment {l} is not a full image")
        inc = frozenset(fchain.values())
        iso = {bchain[x]: fchain[x] for x in src_inc}
        if any(inc & other for other in increments) or inc & lg.head:
            raise NotGrowing(s, f"tail increment {l} overlaps another part")
        if not _is_iso(last, i0, inc, iso):
            raise NotGrowing(s, f"tail increment {l} is not isomorphic to the head increment")
        increments.append(inc)
        isos.append(iso)
    tail_end = frozenset(range(last.n)) - lg.head - frozenset().union(*increments)
    # components never straddle parts
    scc = scc_decomposition(last)
    dec = GrowDecomposition(last, lg.head, tuple(increments), tail_end, tuple(isos), 0)
    for members in scc.members:
        if len({dec.part(q) for q in members}) > 1:
            raise NotGrowing(s, "a strongly connected component straddles two parts")
    diameter = 0
    for q in lg.head | i0:
        for s_, (r,) in last.succ(q).items():
            x = dec.index_in(r)
            if x is not None:
                diameter = max(diameter, x)
    return GrowDecomposition(last, lg.head, tuple(increments), tail_end, tuple(isos), diameter), steps


def decompose(seq: Sequence[Automaton]) -> GrowDecomposition:
    """Decompose the last automaton of an incrementally growing sequence (3 or more)."""
    if len(seq) < 3:
        raise NotGrowing(0, "need at least three automata")
    return decompose_pair_aware(seq)


def decompose_pair_aware(seq: Sequence[Automaton]) -> GrowDecomposition:
    """Like :func:`decompose` but also fills the maps from the previous automaton.

    Accepts two automata, which is what the stability check needs for the
    next-to-last element of a three-element window.
    """
    dec, steps = _decompose(seq)
    if len(seq) < 3:
        return dec
    prev, _ = _decompose(seq[:-1])
    lg = steps[-1]
    head_map = {q: lg.backward[q] for q in prev.head if q in lg.backward}
    tail_map = {q: lg.forward[q] for q in prev.tail_end if q in lg.forward}
    cross = []
    for x in range(min(prev.k, dec.k)):
        inv = {v: u for u, v in prev.increment_iso[x].items()}
        cross.append(_compose_maps(inv, lg.backward, dec.increment_iso[x]))
    return GrowDecomposition(
        dec.automaton, dec.head, dec.increments, dec.tail_end, dec.increment_iso, dec.diameter,
        head_map, tail_map, tuple(cross),
    )


def previous_decomposition(seq: Sequence[Automaton]) -> GrowDecomposition:
    return _decompose(seq[:-1])[0]


# ---------------------------------------------------------------------------
# communication conditions


def communication_equivalent(g: GrowDecomposition, alpha: int, beta: int) -> bool:
    """Do increments ``alpha`` and ``beta`` leave towards matching places?"""
    a = g.automaton
    k = g.k
    if not (0 <= alpha < k and 0 <= beta < k):
        raise IndexError("increment index out of range")
    for q0 in sorted(g.increments[0]):
        q, q2 = g.increment_iso[alpha][q0], g.increment_iso[beta][q0]
        for s in range(len(a.alphabet)):
            r, r2 = a.step(q, s), a.step(q2, s)
            if r is None or r2 is None:
                if (r is None) != (r2 is None):
                    return False
                continue
            pr, pr2 = g.part(r), g.part(r2)
            if pr[0] == "T" and pr2[0] == "T":
                if r != r2:
                    return False
                continue
            if pr[0] != "I" or pr2[0] != "I":
                return False
            gamma = pr[1] - alpha
            if pr2[1] - beta != gamma:
                return False
            if g.to_i0(r) != g.to_i0(r2):
                return False
    return True


def communication_stable(prev: GrowDecomposition, last: GrowDecomposition) -> bool:
    """Head states of consecutive automata leave towards corresponding places."""
    if not last.head_from_prev and prev.head:
        return False
    pa, la = prev.automaton, last.automaton
    for q, q2 in sorted(last.head_from_prev.items()):
        if q not in prev.head or q2 not in last.head:
            return False
        for s in range(len(pa.alphabet)):
            r, r2 = pa.step(q, s), la.step(q2, s)
            if r is None or r2 is None:
                if (r is None) != (r2 is None):
                    return False
                continue
            pr, pr2 = prev.part(r), last.part(r2)
            if pr != pr2:
                return False
            if pr[0] == "H":
                ok = last.head_from_prev.get(r) == r2
            elif pr[0] == "T":
                ok = last.tail_from_prev.get(r) == r2
            else:
                x = pr[1]
                ok = x < len(last.increments_from_prev) and last.increments_from_prev[x].get(r) == r2
            if not ok:
                return False
    return True
