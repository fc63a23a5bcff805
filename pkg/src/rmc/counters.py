"""Counter-word automata: transitions carry vectors of natural increments.

Counters only annotate runs. They never guard a transition.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable, Sequence

from .automata import (
    Alphabet,
    Automaton,
    Kind,
    Lasso,
    guard,
    language_equal,
    live_states,
    reachable,
)
from .errors import (
    AlphabetMismatch,
    BadCounterIndex,
    DimensionMismatch,
    MalformedExtendedSymbol,
    NotWeakResult,
)
from .transducer import Transducer, base_of, canon, pair_alphabet
from .verdicts import CriterionHolds, Inconclusive, Reason, Verdict
from .weak import scc_decomposition, weak_canonical

Vec = tuple[int, ...]


class CounterAutomaton:
    """Automaton whose edges are ``(p, symbol, increments, q)``."""

    __slots__ = ("alphabet", "dim", "n", "initial", "accepting", "transitions", "kind", "_succ")

    def __init__(
        self,
        alphabet: Alphabet,
        dim: int,
        n: int,
        initial: Iterable[int],
        accepting: Iterable[int],
        transitions: Iterable[tuple[int, int, Vec, int]],
        kind: Kind = Kind.FINITE_WORD,
    ):
        if dim < 1:
            raise DimensionMismatch("counter automata need at least one counter")
        self.alphabet = alphabet
        self.dim = dim
        self.n = n
        self.initial = frozenset(initial)
        self.accepting = frozenset(accepting)
        self.kind = kind
        trans = set()
        succ: list[list[tuple[int, Vec, int]]] = [[] for _ in range(n)]
        for p, s, v, q in transitions:
            v = tuple(v)
            if len(v) != dim:
                raise DimensionMismatch(f"increment {v} does not have {dim} entries")
            if any(x < 0 for x in v):
                raise ValueError(f"negative increment {v}")
            if not (0 <= p < n and 0 <= q < n):
                raise ValueError(f"transition ({p}, {s}, {v}, {q}) mentions a state outside 0..{n - 1}")
            if not 0 <= s < len(alphabet):
                raise ValueError(f"symbol id {s} out of range")
            if (p, s, v, q) not in trans:
                trans.add((p, s, v, q))
                succ[p].append((s, v, q))
        for q in self.initial | self.accepting:
            if not 0 <= q < n:
                raise ValueError(f"state {q} out of range")
        self.transitions = frozenset(trans)
        self._succ = tuple(tuple(sorted(row)) for row in succ)

    def succ(self, q: int) -> tuple[tuple[int, Vec, int], ...]:
        return self._succ[q]

    def edges(self) -> list[tuple[int, int, Vec, int]]:
        return sorted(self.transitions)

    def _key(self):
        return (self.alphabet, self.dim, self.n, self.initial, self.accepting, self.transitions, self.kind)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CounterAutomaton) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"<CounterAutomaton dim={self.dim} states={self.n} trans={len(self.transitions)}>"


def counterless(ac: CounterAutomaton) -> Automaton:
    return Automaton(
        ac.alphabet, ac.n, ac.initial, ac.accepting, {(p, s, q) for p, s, _, q in ac.transitions}, ac.kind
    )


def max_increment(ac: CounterAutomaton) -> int:
    return max((max(v) for _, _, v, _ in ac.transitions), default=0)


def counter_zero(a: Automaton) -> CounterAutomaton:
    return CounterAutomaton(a.alphabet, 1, a.n, a.initial, a.accepting, [(p, s, (0,), q) for p, s, q in a.transitions], a.kind)


def with_counters(a: Automaton, dim: int = 1) -> CounterAutomaton:
    return CounterAutomaton(a.alphabet, dim, a.n, a.initial, a.accepting, [(p, s, (0,) * dim, q) for p, s, q in a.transitions], a.kind)


def _prune(ac: CounterAutomaton) -> CounterAutomaton:
    """Keep only reachable states that can still reach acceptance."""
    plain = counterless(ac)
    keep = sorted(reachable(plain) & live_states(plain))
    if not keep:
        return CounterAutomaton(ac.alphabet, ac.dim, 1, [0], [], [], ac.kind)
    ren = {q: i for i, q in enumerate(keep)}
    return CounterAutomaton(
        ac.alphabet,
        ac.dim,
        len(keep),
        [ren[q] for q in ac.initial if q in ren],
        [ren[q] for q in ac.accepting if q in ren],
        [(ren[p], s, v, ren[q]) for p, s, v, q in ac.transitions if p in ren and q in ren],
        ac.kind,
    )


# ---------------------------------------------------------------------------
# extended view: Σ x [0,d]^n


def extended_alphabet(base: Alphabet, dim: int, d: int) -> Alphabet:
    vecs = list(itertools.product(range(d + 1), repeat=dim))
    return Alphabet(tuple(f"{s}+{','.join(map(str, v))}" for s in base.symbols for v in vecs), base.arity)


def _ext_id(s: int, v: Vec, d: int) -> int:
    k = 0
    for x in v:
        k = k * (d + 1) + x
    return s * (d + 1) ** len(v) + k


def extended(ac: CounterAutomaton, d: int | None = None) -> Automaton:
    """The counter automaton read as a plain automaton over Σ x [0,d]^n."""
    top = max_increment(ac)
    d = top if d is None else d
    if d < top:
        raise ValueError(f"bound {d} below the largest increment {top}")
    alpha = extended_alphabet(ac.alphabet, ac.dim, d)
    return Automaton(
        alpha, ac.n, ac.initial, ac.accepting, [(p, _ext_id(s, v, d), q) for p, s, v, q in ac.transitions], ac.kind
    )


def split_extended(label: str) -> tuple[str, Vec]:
    sym, plus, rest = label.rpartition("+")
    if not plus or not sym or not rest:
        raise MalformedExtendedSymbol(f"{label!r} is not of the form symbol+c1,...,cn")
    try:
        vec = tuple(int(x) for x in rest.split(","))
    except ValueError:
        raise MalformedExtendedSymbol(f"{label!r} has a non-numeric increment") from None
    if any(x < 0 for x in vec):
        raise MalformedExtendedSymbol(f"{label!r} has a negative increment")
    return sym, vec


def from_extended(a: Automaton, dim: int, base: Alphabet | None = None) -> CounterAutomaton:
    """Inverse of :func:`extended`."""
    decoded = [split_extended(lab) for lab in a.alphabet.symbols]
    if base is None:
        labels: list[str] = []
        for sym, _ in decoded:
            if sym not in labels:
                labels.append(sym)
        base = Alphabet(tuple(labels), a.alphabet.arity)
    for _, v in decoded:
        if len(v) != dim:
            raise MalformedExtendedSymbol(f"increment {v} does not have {dim} entries")
    sid = [(base.id(sym), v) for sym, v in decoded]
    return CounterAutomaton(
        base, dim, a.n, a.initial, a.accepting, [(p, sid[s][0], sid[s][1], q) for p, s, q in a.transitions], a.kind
    )


def counter_canonical(ac: CounterAutomaton) -> CounterAutomaton:
    """Minimal deterministic form of the extended automaton, relabelled back.

    Weak inputs whose extended form is not inherently weak raise NotWeakResult.
    """
    d = max_increment(ac)
    return from_extended(canon(extended(ac, d)), ac.dim, ac.alphabet)


# ---------------------------------------------------------------------------
# products


def _check_same(a1: CounterAutomaton, a2: CounterAutomaton) -> None:
    if a1.alphabet != a2.alphabet:
        raise AlphabetMismatch("counter automata over different alphabets")
    if a1.kind is not a2.kind:
        raise AlphabetMismatch("counter automata of different kinds")


def _product(alphabet, dim, kind, starts, moves, accepting) -> CounterAutomaton:
    ids: dict = {}
    order: list = []
    for st in starts:
        if st not in ids:
            ids[st] = len(order)
            order.append(st)
            guard(len(order))
    trans = []
    i = 0
    while i < len(order):
        for s, v, nxt in moves(order[i]):
            j = ids.get(nxt)
            if j is None:
                j = ids[nxt] = len(order)
                order.append(nxt)
                guard(len(order))
            trans.append((i, s, v, j))
        i += 1
    acc = [k for k, st in enumerate(order) if accepting(st)]
    if not order:
        return CounterAutomaton(alphabet, dim, 1, [0], [], [], kind)
    return _prune(CounterAutomaton(alphabet, dim, len(order), range(len(starts)), acc, trans, kind))


def counter_intersection(a1: CounterAutomaton, a2: CounterAutomaton) -> CounterAutomaton:
    """Runs of both on the same word; valuations side by side (dimension n1 + n2)."""
    _check_same(a1, a2)
    by_sym2 = [{} for _ in range(a2.n)]
    for q in range(a2.n):
        for s, v, r in a2.succ(q):
            by_sym2[q].setdefault(s, []).append((v, r))

    def moves(st):
        p, q = st
        for s, v1, p2 in a1.succ(p):
            for v2, q2 in by_sym2[q].get(s, ()):
                yield s, v1 + v2, (p2, q2)

    starts = sorted(itertools.product(sorted(a1.initial), sorted(a2.initial)))
    return _product(
        a1.alphabet, a1.dim + a2.dim, a1.kind, starts, moves,
        lambda st: st[0] in a1.accepting and st[1] in a2.accepting,
    )


def counter_composition(t1: CounterAutomaton, t2: CounterAutomaton) -> CounterAutomaton:
    """Relation ``t2 ∘ t1`` (t1 applied first) with valuations ``(v1, v2)``."""
    _check_same(t1, t2)
    if t1.alphabet.arity != 2:
        raise AlphabetMismatch("counter composition needs transducers")
    m = len(base_of(t1.alphabet))
    mid2 = [{} for _ in range(t2.n)]
    for q in range(t2.n):
        for s, v, r in t2.succ(q):
            z, y = divmod(s, m)
            mid2[q].setdefault(z, []).append((y, v, r))

    def moves(st):
        p, q = st
        for s, v1, p2 in t1.succ(p):
            x, z = divmod(s, m)
            for y, v2, q2 in mid2[q].get(z, ()):
                yield x * m + y, v1 + v2, (p2, q2)

    starts = sorted(itertools.product(sorted(t1.initial), sorted(t2.initial)))
    return _product(
        t1.alphabet, t1.dim + t2.dim, t1.kind, starts, moves,
        lambda st: st[0] in t1.accepting and st[1] in t2.accepting,
    )


def counter_image(t: Transducer, ac: CounterAutomaton) -> CounterAutomaton:
    """Image of a counter automaton under a plain transducer; counters ride along."""
    if ac.alphabet != t.base:
        raise AlphabetMismatch("automaton alphabet differs from the transducer's base alphabet")
    if ac.kind is not t.kind:
        raise AlphabetMismatch("automaton and transducer of different kinds")
    at = t.inner
    m = len(t.base)
    by_in = [{} for _ in range(at.n)]
    for q in range(at.n):
        for s, rs in at.succ(q).items():
            x, y = divmod(s, m)
            for r in rs:
                by_in[q].setdefault(x, []).append((y, r))

    def moves(st):
        p, q = st
        for x, v, p2 in ac.succ(p):
            for y, q2 in by_in[q].get(x, ()):
                yield y, v, (p2, q2)

    starts = sorted(itertools.product(sorted(ac.initial), sorted(at.initial)))
    return _product(
        ac.alphabet, ac.dim, ac.kind, starts, moves,
        lambda st: st[0] in ac.accepting and st[1] in at.accepting,
    )


def counter_project(ac: CounterAutomaton, i: int) -> CounterAutomaton:
    """Forget counter ``i`` (1-based)."""
    if not 1 <= i <= ac.dim:
        raise BadCounterIndex(f"counter {i} not in 1..{ac.dim}")
    if ac.dim == 1:
        raise BadCounterIndex("cannot project away the only counter")
    k = i - 1
    return CounterAutomaton(
        ac.alphabet, ac.dim - 1, ac.n, ac.initial, ac.accepting,
        [(p, s, v[:k] + v[k + 1:], q) for p, s, v, q in ac.transitions], ac.kind,
    )


def counter_project_all_but(ac: CounterAutomaton, keep: Sequence[int]) -> CounterAutomaton:
    """Keep only the listed counters (1-based), in the given order."""
    for i in keep:
        if not 1 <= i <= ac.dim:
            raise BadCounterIndex(f"counter {i} not in 1..{ac.dim}")
    if not keep:
        raise BadCounterIndex("must keep at least one counter")
    return CounterAutomaton(
        ac.alphabet, len(keep), ac.n, ac.initial, ac.accepting,
        [(p, s, tuple(v[i - 1] for i in keep), q) for p, s, v, q in ac.transitions], ac.kind,
    )


def counter_union_extended(a1: CounterAutomaton, a2: CounterAutomaton) -> CounterAutomaton:
    """Union of the extended languages (disjoint union of the graphs)."""
    _check_same(a1, a2)
    if a1.dim != a2.dim:
        raise DimensionMismatch(f"dimensions {a1.dim} and {a2.dim} differ")
    off = a1.n
    return CounterAutomaton(
        a1.alphabet, a1.dim, a1.n + a2.n,
        set(a1.initial) | {q + off for q in a2.initial},
        set(a1.accepting) | {q + off for q in a2.accepting},
        list(a1.transitions) + [(p + off, s, v, q + off) for p, s, v, q in a2.transitions],
        a1.kind,
    )


def extended_equal(a1: CounterAutomaton, a2: CounterAutomaton) -> Verdict:
    """Equal extended languages imply equal counter languages; the converse fails."""
    if a1.dim != a2.dim:
        raise DimensionMismatch(f"dimensions {a1.dim} and {a2.dim} differ")
    _check_same(a1, a2)
    d = max(max_increment(a1), max_increment(a2))
    e1, e2 = extended(a1, d), extended(a2, d)
    if a1.kind is Kind.WEAK_BUCHI:
        try:
            same = weak_canonical(e1) == weak_canonical(e2)
        except NotWeakResult as exc:
            return Inconclusive(Reason.NOT_INHERENTLY_WEAK, str(exc))
    else:
        same = language_equal(e1, e2)
    if same:
        return CriterionHolds()
    return Inconclusive(Reason.EXTENDED_LANGUAGE_GAP, "extended languages differ")


def is_run_bounded(ac: CounterAutomaton) -> bool:
    """Weak kind: every edge inside an accepting component carries the zero vector."""
    if ac.kind is Kind.FINITE_WORD:
        return True
    scc = scc_decomposition(counterless(ac))
    for p, _, v, q in ac.transitions:
        c = scc.comp[p]
        if c == scc.comp[q] and p in ac.accepting and any(v):
            return False
    return True


# ---------------------------------------------------------------------------
# synchronisation of two counters


INIT = "init"


def sync_step(state, di: int, dj: int, m: int):
    """Difference tracker for ``c_i - c_j`` with bound ``m``; None = run dropped.

    States: INIT, the middle band -m+1..m-1, the saturated band m..2m-1.
    In the saturated band the state records how far c_j has caught up.
    """
    diff = di - dj
    if state == INIT:
        if di == 0 and dj == 0:
            return INIT
        if -m < diff < m:
            return diff
        return m if diff >= m else None
    if state < m:
        nxt = state + diff
        if -m < nxt < m:
            return nxt
        return m if nxt >= m else None
    nxt = state - diff
    if nxt <= m:
        return m
    if nxt <= 2 * m - 1:
        return nxt
    return None


def sync_accepting(state, m: int) -> bool:
    return state == INIT or state >= 1


def sync_states(m: int) -> list:
    return [INIT] + list(range(-m + 1, 2 * m))


def universal_synchronized(
    alphabet: Alphabet, dim: int, d: int, i: int, j: int, m: int, kind: Kind = Kind.FINITE_WORD
) -> CounterAutomaton:
    """Every word, every increment in [0,d]^dim, runs kept only while c_i - c_j stays trackable."""
    if m < 1:
        raise ValueError("synchronisation bound must be at least 1")
    if i == j:
        raise BadCounterIndex("compared counters must differ")
    for k in (i, j):
        if not 1 <= k <= dim:
            raise BadCounterIndex(f"counter {k} not in 1..{dim}")
    states = sync_states(m)
    sid = {st: k for k, st in enumerate(states)}
    trans = []
    for st in states:
        for v in itertools.product(range(d + 1), repeat=dim):
            nxt = sync_step(st, v[i - 1], v[j - 1], m)
            if nxt is None:
                continue
            for s in range(len(alphabet)):
                trans.append((sid[st], s, v, sid[nxt]))
    acc = [sid[st] for st in states if sync_accepting(st, m)]
    return CounterAutomaton(alphabet, dim, len(states), [sid[INIT]], acc, trans, kind)


def restrict_greater(ac: CounterAutomaton, i: int, others: Iterable[int], m: int) -> CounterAutomaton:
    """Accepting runs that end with c_i above every other listed counter.

    Product with one difference tracker per compared counter, so the
    result keeps only runs where the counters stay m-synchronised.
    """
    others = sorted(set(others))
    for k in [i, *others]:
        if not 1 <= k <= ac.dim:
            raise BadCounterIndex(f"counter {k} not in 1..{ac.dim}")
    if i in others:
        raise BadCounterIndex("a counter cannot be compared with itself")
    if m < 1:
        raise ValueError("synchronisation bound must be at least 1")

    def moves(st):
        q, track = st
        for s, v, q2 in ac.succ(q):
            nxt = []
            for jx, cur in zip(others, track):
                step = sync_step(cur, v[i - 1], v[jx - 1], m)
                if step is None:
                    break
                nxt.append(step)
            else:
                yield s, v, (q2, tuple(nxt))

    start = tuple(INIT for _ in others)
    return _product(
        ac.alphabet, ac.dim, ac.kind, [(q, start) for q in sorted(ac.initial)], moves,
        lambda st: st[0] in ac.accepting and all(sync_accepting(x, m) for x in st[1]),
    )



def counter_moved(ac: CounterAutomaton, i: int = 1) -> CounterAutomaton:
    """Accepting runs on which counter ``i`` was incremented at least once."""
    if not 1 <= i <= ac.dim:
        raise BadCounterIndex(f"counter {i} not in 1..{ac.dim}")

    def moves(st):
        q, moved = st
        for s, v, q2 in ac.succ(q):
            yield s, v, (q2, moved or v[i - 1] > 0)

    return _product(ac.alphabet, ac.dim, ac.kind, [(q, False) for q in sorted(ac.initial)], moves,
                    lambda st: st[1] and st[0] in ac.accepting)


def restricted_chain(target: CounterAutomaton, chain: Sequence[tuple[CounterAutomaton, bool]], m: int) -> CounterAutomaton:
    """Fused form of "intersect with a composition, keep c_1 ahead, drop the rest".

    ``target`` has one counter. ``chain`` lists relations applied left to
    right, each with a flag saying whether its (single) counter is compared
    with the target's. An arity-1 first link is a source: it produces the
    word the rest of the chain rewrites. The words read by the target must
    be related by the whole chain.

    Same extended language as building the composition, intersecting,
    applying ``restrict_greater`` and projecting onto c_1, but runs whose
    counters drift apart are cut while exploring, before they multiply.
    """
    if target.dim != 1:
        raise DimensionMismatch("the target carries exactly one counter")
    if m < 1:
        raise ValueError("synchronisation bound must be at least 1")
    if not chain:
        raise ValueError("empty chain")
    base = base_of(target.alphabet) if target.alphabet.arity == 2 else target.alphabet
    nb = len(base)
    links = []
    for k, (ac, counted) in enumerate(chain):
        if ac.dim != 1:
            raise DimensionMismatch("chain links carry exactly one counter")
        if ac.kind is not target.kind:
            raise AlphabetMismatch("chain link of a different kind")
        source = ac.alphabet.arity == 1
        if (source and k) or (source and target.alphabet.arity != 1) or (not source and ac.alphabet != pair_alphabet(base)):
            raise AlphabetMismatch("chain links do not fit together")
        rows = []
        for q in range(ac.n):
            row: dict = {}
            for sym, v, r in ac.succ(q):
                x, y = (None, sym) if source else divmod(sym, nb)
                row.setdefault(x, []).append((y, v[0], r))
            rows.append(row)
        links.append((rows, counted))
    if target.alphabet.arity == 1 and chain[0][0].alphabet.arity != 1:
        raise AlphabetMismatch("an automaton target needs a source link")

    def walk(k, letter, c1, states, tracks, out_states, out_tracks):
        if k == len(links):
            yield letter, tuple(out_states), tuple(out_tracks)
            return
        rows, counted = links[k]
        for y, v, r in rows[states[k]].get(letter, ()):
            if counted:
                t = sync_step(tracks[len(out_tracks)], c1, v, m)
                if t is None:
                    continue
                yield from walk(k + 1, y, c1, states, tracks, out_states + [r], out_tracks + [t])
            else:
                yield from walk(k + 1, y, c1, states, tracks, out_states + [r], out_tracks)

    def moves(st):
        q, states, tracks = st
        for sym, v, q2 in target.succ(q):
            if target.alphabet.arity == 2:
                x, z = divmod(sym, nb)
            else:
                x, z = None, sym
            for end, s2, t2 in walk(0, x, v[0], states, tracks, [], []):
                if end == z:
                    yield sym, v, (q2, s2, t2)

    ntracks = sum(1 for _, c in chain if c)
    starts = sorted(
        (q, states, (INIT,) * ntracks)
        for q in target.initial
        for states in itertools.product(*(sorted(ac.initial) for ac, _ in chain))
    )
    return _product(
        target.alphabet, 1, target.kind, starts, moves,
        lambda st: st[0] in target.accepting
        and all(q in ac.accepting for q, (ac, _) in zip(st[1], chain))
        and all(sync_accepting(x, m) for x in st[2]),
    )

# ---------------------------------------------------------------------------
# bounded counter languages (used by tests and debugging)


def counter_sample(ac: CounterAutomaton, max_len: int) -> set[tuple[tuple[int, ...], Vec]]:
    """All ``(word, valuation)`` pairs realised by accepting runs on words up to ``max_len``."""
    if ac.kind is not Kind.FINITE_WORD:
        raise TypeError("use counter_lasso_sample for weak counter automata")
    zero = (0,) * ac.dim
    layer = {(q, (), zero) for q in ac.initial}
    out = set()
    for length in range(max_len + 1):
        for q, w, v in layer:
            if q in ac.accepting:
                out.add((w, v))
        if length == max_len:
            break
        nxt = set()
        for q, w, v in layer:
            for s, inc, q2 in ac.succ(q):
                nxt.add((q2, w + (s,), tuple(a + b for a, b in zip(v, inc))))
        layer = nxt
    return out


def _zero_cycles(ac: CounterAutomaton, loop: Sequence[int]) -> set[int]:
    """States q with a path q -loop-> q through accepting states on zero increments."""
    zero = (0,) * ac.dim
    out = set()
    for q in ac.accepting:
        cur = {q}
        for s in loop:
            cur = {r for p in cur for s2, v, r in ac.succ(p) if s2 == s and v == zero and r in ac.accepting}
            if not cur:
                break
        if q in cur:
            out.add(q)
    return out


def counter_lasso_sample(ac: CounterAutomaton, max_stem: int, max_loop: int) -> set[tuple[Lasso, Vec]]:
    """``(lasso, valuation)`` pairs from runs that read the stem, then cycle on the loop at zero cost."""
    zero = (0,) * ac.dim
    stems: dict[tuple[int, ...], set[tuple[int, Vec]]] = {(): {(q, zero) for q in ac.initial}}
    frontier = dict(stems)
    for _ in range(max_stem):
        nxt: dict = {}
        for w, ends in frontier.items():
            for q, v in ends:
                for s, inc, q2 in ac.succ(q):
                    nxt.setdefault(w + (s,), set()).add((q2, tuple(a + b for a, b in zip(v, inc))))
        stems.update(nxt)
        frontier = nxt
    out = set()
    nsym = len(ac.alphabet)
    for k in range(1, max_loop + 1):
        for loop in itertools.product(range(nsym), repeat=k):
            good = _zero_cycles(ac, loop)
            if not good:
                continue
            for w, ends in stems.items():
                for q, v in ends:
                    if q in good:
                        out.add((Lasso(w, loop), v))
    return out


def sync_bounded(run_incs: Sequence[Vec], i: int, j: int, bound: int) -> bool:
    """Every contiguous subrun keeps |Δc_j - Δc_i| within ``bound``."""
    diffs = [0]
    for v in run_incs:
        diffs.append(diffs[-1] + v[j - 1] - v[i - 1])
    return max(diffs) - min(diffs) <= bound


def accepting_runs(ac: CounterAutomaton, max_len: int):
    """Yield ``(word, increments per step)`` for every accepting run up to ``max_len``."""
    todo = deque((q, (), ()) for q in sorted(ac.initial))
    while todo:
        q, w, incs = todo.popleft()
        if q in ac.accepting:
            yield w, incs
        if len(w) < max_len:
            for s, v, q2 in ac.succ(q):
                todo.append((q2, w + (s,), incs + (v,)))
