"""Finite automata over finite alphabets.

Automata are immutable once built. Transitions are partial: a missing
transition rejects. Every operation here returns a fresh automaton and
leaves its inputs alone.
"""

from __future__ import annotations

import contextlib
import contextvars
import enum
import functools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import AlphabetMismatch, BadTrackIndex, NotDeterministic, StateLimitExceeded


_budget: contextvars.ContextVar[int | None] = contextvars.ContextVar("state_budget", default=None)


@contextlib.contextmanager
def state_budget(limit: int | None):
    """Make every subset/product construction in this context stop past ``limit`` states."""
    token = _budget.set(limit)
    try:
        yield
    finally:
        _budget.reset(token)


def guard(n: int) -> None:
    """``n`` counts what a construction holds: states, plus subset members for subset constructions."""
    limit = _budget.get()
    if limit is not None and n > limit:
        raise StateLimitExceeded(limit)


class Kind(enum.Enum):
    FINITE_WORD = "finite-word"
    WEAK_BUCHI = "weak-buchi"


@dataclass(frozen=True)
class Alphabet:
    """Ordered symbol table. Multi-track symbols are written ``a/b/...``."""

    symbols: tuple[str, ...]
    arity: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise ValueError("alphabet must be nonempty")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("duplicate symbol in alphabet")
        for s in self.symbols:
            if not s or any(c.isspace() for c in s) or "#" in s:
                raise ValueError(f"bad symbol {s!r}")
            if s.count("/") != self.arity - 1:
                raise ValueError(f"symbol {s!r} does not have {self.arity} tracks")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    @functools.cached_property
    def index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.symbols)}

    def id(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise KeyError(f"symbol {label!r} not in alphabet") from None

    def tracks(self, sid: int) -> tuple[str, ...]:
        return tuple(self.symbols[sid].split("/"))

    def encode(self, word: Iterable) -> tuple[int, ...]:
        """Map a word given as labels (or already as ids) to symbol ids."""
        if isinstance(word, str) and word not in self.index and self.arity == 1:
            word = list(word)
        elif isinstance(word, str):
            word = [word]
        return tuple(w if isinstance(w, int) else self.id(w) for w in word)

    def decode(self, ids: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.symbols[i] for i in ids)

    @classmethod
    def of(cls, *labels: str) -> "Alphabet":
        return cls(tuple(labels), labels[0].count("/") + 1 if labels else 1)

    @classmethod
    def product(cls, *parts: "Alphabet") -> "Alphabet":
        syms: list[str] = [""]
        for p in parts:
            syms = [f"{x}/{y}" if x else y for x in syms for y in p.symbols]
        return cls(tuple(syms), sum(p.arity for p in parts))


@dataclass(frozen=True)
class Lasso:
    """The ultimately periodic word ``stem loop^omega``."""

    stem: tuple[int, ...]
    loop: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.loop:
            raise ValueError("a lasso needs a nonempty loop")

    def labels(self, alphabet: Alphabet) -> str:
        return " ".join(alphabet.decode(self.stem)) + " (" + " ".join(alphabet.decode(self.loop)) + ")^w"


class Automaton:
    """Finite-word or weak Buchi acceptor with dense integer states.

    ``co_buchi`` only appears on the output of breakpoint determinization: a
    run is then accepting when its loop stays inside ``accepting``.
    """

    __slots__ = ("alphabet", "n", "initial", "accepting", "transitions", "kind", "co_buchi", "_succ", "_det")

    def __init__(
        self,
        alphabet: Alphabet,
        n: int,
        initial: Iterable[int],
        accepting: Iterable[int],
        transitions: Iterable[tuple[int, int, int]],
        kind: Kind = Kind.FINITE_WORD,
        co_buchi: bool = False,
    ):
        self.alphabet = alphabet
        self.n = n
        self.initial = frozenset(initial)
        self.accepting = frozenset(accepting)
        self.transitions = frozenset(transitions)
        self.kind = kind
        self.co_buchi = co_buchi
        nsym = len(alphabet)
        for q in self.initial | self.accepting:
            if not 0 <= q < n:
                raise ValueError(f"state {q} out of range 0..{n - 1}")
        succ: list[dict[int, list[int]]] = [{} for _ in range(n)]
        for p, s, q in self.transitions:
            if not (0 <= p < n and 0 <= q < n):
                raise ValueError(f"transition ({p}, {s}, {q}) mentions a state outside 0..{n - 1}")
            if not 0 <= s < nsym:
                raise ValueError(f"symbol id {s} out of range")
            succ[p].setdefault(s, []).append(q)
        self._succ = tuple({s: tuple(sorted(t)) for s, t in sorted(d.items())} for d in succ)
        self._det = len(self.initial) == 1 and all(len(t) == 1 for d in self._succ for t in d.values())

    # -- structure ---------------------------------------------------------
    def succ(self, q: int) -> dict[int, tuple[int, ...]]:
        return self._succ[q]

    def targets(self, q: int, s: int) -> tuple[int, ...]:
        return self._succ[q].get(s, ())

    def step(self, q: int, s: int) -> int | None:
        t = self._succ[q].get(s)
        return t[0] if t else None

    @property
    def deterministic(self) -> bool:
        return self._det

    @property
    def init(self) -> int:
        """The unique initial state of a deterministic automaton."""
        if len(self.initial) != 1:
            raise NotDeterministic("automaton does not have exactly one initial state")
        return next(iter(self.initial))

    def edges(self) -> list[tuple[int, int, int]]:
        return sorted(self.transitions)

    @property
    def is_weak_kind(self) -> bool:
        return self.kind is Kind.WEAK_BUCHI

    def replace(self, **kw) -> "Automaton":
        args = dict(
            alphabet=self.alphabet,
            n=self.n,
            initial=self.initial,
            accepting=self.accepting,
            transitions=self.transitions,
            kind=self.kind,
            co_buchi=self.co_buchi,
        )
        args.update(kw)
        return Automaton(**args)

    # -- membership ---------------------------------------------------------
    def accepts(self, word) -> bool:
        """Finite-word membership (nondeterministic simulation)."""
        if self.kind is not Kind.FINITE_WORD:
            raise TypeError("use accepts_lasso for weak Buchi automata")
        cur = set(self.initial)
        for s in self.alphabet.encode(word):
            cur = {q for p in cur for q in self.targets(p, s)}
            if not cur:
                return False
        return bool(cur & self.accepting)

    def accepts_lasso(self, stem, loop) -> bool:
        from .weak import accepts_lasso

        return accepts_lasso(self, self.alphabet.encode(stem), self.alphabet.encode(loop))

    # -- dunder -------------------------------------------------------------
    def _key(self):
        return (self.alphabet, self.n, self.initial, self.accepting, self.transitions, self.kind, self.co_buchi)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Automaton) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        k = "weak" if self.kind is Kind.WEAK_BUCHI else "fw"
        return f"<Automaton {k} states={self.n} trans={len(self.transitions)} |Σ|={len(self.alphabet)}>"


def empty_automaton(alphabet: Alphabet, kind: Kind = Kind.FINITE_WORD) -> Automaton:
    """Canonical form of the empty language: one initial, nonaccepting state."""
    return Automaton(alphabet, 1, [0], [], [], kind)


def universal(alphabet: Alphabet, kind: Kind = Kind.FINITE_WORD) -> Automaton:
    return Automaton(alphabet, 1, [0], [0], [(0, s, 0) for s in range(len(alphabet))], kind)


def from_words(alphabet: Alphabet, words: Iterable, kind: Kind = Kind.FINITE_WORD) -> Automaton:
    """Trie acceptor for a finite set of finite words."""
    trans: list[tuple[int, int, int]] = []
    acc: set[int] = set()
    children: dict[tuple[int, int], int] = {}
    n = 1
    for w in words:
        q = 0
        for s in alphabet.encode(w):
            nxt = children.get((q, s))
            if nxt is None:
                nxt = children[(q, s)] = n
                trans.append((q, s, n))
                n += 1
            q = nxt
        acc.add(q)
    return Automaton(alphabet, n, [0], acc, trans, kind)


# ---------------------------------------------------------------------------
# reachability helpers


def reachable(a: Automaton, start: Iterable[int] | None = None) -> set[int]:
    seen = set(a.initial if start is None else start)
    todo = list(seen)
    while todo:
        p = todo.pop()
        for ts in a.succ(p).values():
            for q in ts:
                if q not in seen:
                    seen.add(q)
                    todo.append(q)
    return seen


def predecessors(a: Automaton) -> list[set[int]]:
    pred: list[set[int]] = [set() for _ in range(a.n)]
    for p, _, q in a.transitions:
        pred[q].add(p)
    return pred


def coreachable(a: Automaton, targets: Iterable[int]) -> set[int]:
    pred = predecessors(a)
    seen = set(targets)
    todo = list(seen)
    while todo:
        q = todo.pop()
        for p in pred[q]:
            if p not in seen:
                seen.add(p)
                todo.append(p)
    return seen


def live_states(a: Automaton) -> set[int]:
    """States from which some accepted word (or lasso) can be read."""
    if a.kind is Kind.FINITE_WORD:
        return coreachable(a, a.accepting)
    from .weak import accepting_cycle_states

    return coreachable(a, accepting_cycle_states(a))


def restrict(a: Automaton, keep: Iterable[int]) -> Automaton:
    """Sub-automaton on ``keep``, renumbered in increasing id order."""
    keep = sorted(set(keep))
    ren = {q: i for i, q in enumerate(keep)}
    return Automaton(
        a.alphabet,
        len(keep),
        [ren[q] for q in a.initial if q in ren],
        [ren[q] for q in a.accepting if q in ren],
        [(ren[p], s, ren[q]) for p, s, q in a.transitions if p in ren and q in ren],
        a.kind,
        a.co_buchi,
    )


def trim(a: Automaton) -> Automaton:
    """Drop unreachable states and states with an empty language."""
    keep = reachable(a) & live_states(a)
    if not keep:
        return empty_automaton(a.alphabet, a.kind)
    return restrict(a, keep)


def complete(a: Automaton) -> tuple[Automaton, int]:
    """Add a nonaccepting sink for every missing transition.

    Returns the completed automaton and the sink id. The sink is always added
    (possibly unreachable) so callers can rely on its id being ``a.n``.
    """
    sink = a.n
    nsym = len(a.alphabet)
    trans = set(a.transitions)
    for q in range(a.n + 1):
        row = a.succ(q) if q < a.n else {}
        for s in range(nsym):
            if s not in row:
                trans.add((q, s, sink))
    return Automaton(a.alphabet, a.n + 1, a.initial, a.accepting, trans, a.kind, a.co_buchi), sink


# ---------------------------------------------------------------------------
# determinization and minimization


def determinize(a: Automaton) -> Automaton:
    """Subset construction; only reachable subsets, no explicit sink."""
    if a.kind is not Kind.FINITE_WORD:
        raise TypeError("determinize is for finite-word automata; see weak.determinize_weak")
    nsym = len(a.alphabet)
    start = frozenset(a.initial)
    ids = {start: 0}
    order = [start]
    trans: list[tuple[int, int, int]] = []
    i = load = 0
    while i < len(order):
        cur = order[i]
        for s in range(nsym):
            nxt = frozenset(q for p in cur for q in a.targets(p, s))
            if not nxt:
                continue
            j = ids.get(nxt)
            if j is None:
                j = ids[nxt] = len(order)
                order.append(nxt)
                load += len(nxt) + 1
                guard(load)
            trans.append((i, s, j))
        i += 1
    acc = [k for k, sub in enumerate(order) if sub & a.accepting]
    return Automaton(a.alphabet, len(order), [0], acc, trans, a.kind)


def partition_refine(delta: Sequence[Sequence[int]], nsym: int, labels: Sequence) -> list[int]:
    """Hopcroft refinement of the initial partition ``labels``.

    ``delta`` must be complete. Returns a block index per state; the block
    numbering is arbitrary, callers renumber canonically.
    """
    n = len(delta)
    inv: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(nsym)]
    for q in range(n):
        row = delta[q]
        for s in range(nsym):
            inv[s][row[s]].append(q)
    groups: dict = {}
    for q, lab in enumerate(labels):
        groups.setdefault(lab, []).append(q)
    blocks = [set(g) for g in groups.values()]
    where = [0] * n
    for b, members in enumerate(blocks):
        for q in members:
            where[q] = b
    work = list(range(len(blocks)))
    pending = set(work)
    while work:
        b = work.pop()
        pending.discard(b)
        splitter = list(blocks[b])
        for s in range(nsym):
            inv_s = inv[s]
            touched: dict[int, list[int]] = {}
            for q in splitter:
                for p in inv_s[q]:
                    touched.setdefault(where[p], []).append(p)
            for y, hit in touched.items():
                if len(hit) == len(blocks[y]):
                    continue
                new = set(hit)
                blocks[y] -= new
                nb = len(blocks)
                blocks.append(new)
                for p in new:
                    where[p] = nb
                if y in pending:
                    work.append(nb)
                    pending.add(nb)
                else:
                    pick = nb if len(new) <= len(blocks[y]) else y
                    work.append(pick)
                    pending.add(pick)
    return where


def quotient(a: Automaton, block: Sequence[int], drop: set[int] = frozenset()) -> Automaton:
    """Collapse a deterministic automaton along ``block`` and renumber canonically."""
    trans = set()
    acc = set()
    for p, s, q in a.transitions:
        if block[p] in drop or block[q] in drop:
            continue
        trans.add((block[p], s, block[q]))
    for q in a.accepting:
        if block[q] not in drop:
            acc.add(block[q])
    nb = max(block) + 1 if block else 0
    init = {block[q] for q in a.initial if block[q] not in drop}
    if not init:
        return empty_automaton(a.alphabet, a.kind)
    return canonical(Automaton(a.alphabet, nb, init, acc, trans, a.kind, a.co_buchi))


def canonical(a: Automaton) -> Automaton:
    """Renumber a deterministic automaton breadth-first from its initial state.

    Symbols are explored in alphabet order; unreachable states disappear.
    """
    if not a.deterministic:
        raise NotDeterministic("canonical numbering needs a deterministic automaton")
    start = a.init
    ren = {start: 0}
    order = [start]
    i = 0
    while i < len(order):
        p = order[i]
        for s, ts in a.succ(p).items():
            q = ts[0]
            if q not in ren:
                ren[q] = len(order)
                order.append(q)
        i += 1
    return Automaton(
        a.alphabet,
        len(order),
        [0],
        [ren[q] for q in a.accepting if q in ren],
        [(ren[p], s, ren[q]) for p, s, q in a.transitions if p in ren],
        a.kind,
        a.co_buchi,
    )


def _complete_table(a: Automaton) -> tuple[list[list[int]], int]:
    sink = a.n
    nsym = len(a.alphabet)
    table = []
    for q in range(a.n):
        row = a.succ(q)
        table.append([row[s][0] if s in row else sink for s in range(nsym)])
    table.append([sink] * nsym)
    return table, sink


def minimize(a: Automaton) -> Automaton:
    """Canonical minimal partial DFA (finite-word) or weak DBA (weak kind)."""
    if a.kind is Kind.WEAK_BUCHI:
        from .weak import minimize_weak

        return minimize_weak(a)
    if not a.deterministic:
        raise NotDeterministic("minimize expects a deterministic automaton")
    a = trim(a)
    if not a.accepting:
        return empty_automaton(a.alphabet, a.kind)
    table, sink = _complete_table(a)
    labels = [q in a.accepting for q in range(a.n)] + [False]
    block = partition_refine(table, len(a.alphabet), labels)
    # after trimming only the sink has an empty language
    return quotient(a, block[: a.n], drop={block[sink]})


def canonical_form(a: Automaton) -> Automaton:
    """Determinize when needed, then minimize."""
    if a.kind is Kind.WEAK_BUCHI:
        from .weak import weak_canonical

        return weak_canonical(a)
    return minimize(a if a.deterministic else determinize(a))


# ---------------------------------------------------------------------------
# boolean operations and products


def _check_same(a: Automaton, b: Automaton) -> None:
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"{a.alphabet.symbols} vs {b.alphabet.symbols}")
    if a.kind is not b.kind:
        raise AlphabetMismatch("automata of different kinds")


class BoolOp(enum.Enum):
    UNION = "union"
    INTERSECTION = "intersection"
    DIFFERENCE = "difference"


def boolean(op: BoolOp | str, a: Automaton, b: Automaton) -> Automaton:
    """Product construction on finite-word automata; result deterministic and trimmed."""
    op = BoolOp(op)
    _check_same(a, b)
    if a.kind is not Kind.FINITE_WORD:
        raise TypeError("weak Buchi booleans live in rmc.weak")
    da, sa = complete(a if a.deterministic else determinize(a))
    db, sb = complete(b if b.deterministic else determinize(b))
    return _product_det(op, da, db)


def _product_det(op: BoolOp, da: Automaton, db: Automaton) -> Automaton:
    nsym = len(da.alphabet)
    start = (da.init, db.init)
    ids = {start: 0}
    order = [start]
    trans = []
    i = 0
    while i < len(order):
        p, q = order[i]
        for s in range(nsym):
            t = (da.step(p, s), db.step(q, s))
            j = ids.get(t)
            if j is None:
                j = ids[t] = len(order)
                order.append(t)
                guard(len(order))
            trans.append((i, s, j))
        i += 1
    if op is BoolOp.UNION:
        acc = [k for k, (p, q) in enumerate(order) if p in da.accepting or q in db.accepting]
    elif op is BoolOp.INTERSECTION:
        acc = [k for k, (p, q) in enumerate(order) if p in da.accepting and q in db.accepting]
    else:
        acc = [k for k, (p, q) in enumerate(order) if p in da.accepting and q not in db.accepting]
    return trim(Automaton(da.alphabet, len(order), [0], acc, trans, da.kind))


def union(a: Automaton, b: Automaton) -> Automaton:
    return boolean(BoolOp.UNION, a, b)


def intersection(a: Automaton, b: Automaton) -> Automaton:
    return boolean(BoolOp.INTERSECTION, a, b)


def difference(a: Automaton, b: Automaton) -> Automaton:
    return boolean(BoolOp.DIFFERENCE, a, b)


def disjoint_union(a: Automaton, b: Automaton) -> Automaton:
    """Nondeterministic union: both automata side by side."""
    _check_same(a, b)
    off = a.n
    return Automaton(
        a.alphabet,
        a.n + b.n,
        list(a.initial) + [q + off for q in b.initial],
        list(a.accepting) + [q + off for q in b.accepting],
        list(a.transitions) + [(p + off, s, q + off) for p, s, q in b.transitions],
        a.kind,
    )


def complement(a: Automaton) -> Automaton:
    if a.kind is Kind.WEAK_BUCHI:
        from .weak import complement_weak

        return complement_weak(a)
    d, sink = complete(a if a.deterministic else determinize(a))
    flipped = d.replace(accepting=set(range(d.n)) - d.accepting)
    return minimize(flipped)


def is_empty(a: Automaton):
    """Return ``(empty, witness)``.

    The witness is a shortest accepted word (finite-word kind) or a lasso with
    shortest stem, then shortest loop (weak kind); ``None`` when empty.
    """
    if a.kind is Kind.WEAK_BUCHI:
        from .weak import find_lasso

        w = find_lasso(a)
        return (w is None, w)
    parent: dict[int, tuple[int, int] | None] = {q: None for q in a.initial}
    queue = deque(sorted(a.initial))
    while queue:
        p = queue.popleft()
        if p in a.accepting:
            word = []
            while parent[p] is not None:
                p, s = parent[p]
                word.append(s)
            return False, tuple(reversed(word))
        for s, ts in a.succ(p).items():
            for q in ts:
                if q not in parent:
                    parent[q] = (p, s)
                    queue.append(q)
    return True, None


def language_equal(a: Automaton, b: Automaton) -> bool:
    _check_same(a, b)
    return canonical_form(a) == canonical_form(b)


def language_subset(a: Automaton, b: Automaton):
    """``(a ⊆ b, witness in a minus b)`` for finite-word automata."""
    _check_same(a, b)
    if a.kind is Kind.WEAK_BUCHI:
        from .weak import omega_language_subset

        return omega_language_subset(a, b)
    empty, w = is_empty(difference(a, b))
    return empty, w


def synchronous_product(a: Automaton, b: Automaton) -> Automaton:
    """Track-wise pairing: accepts ``u x v`` for ``u`` in L(a), ``v`` in L(b)."""
    if a.kind is not b.kind:
        raise AlphabetMismatch("automata of different kinds")
    alpha = Alphabet.product(a.alphabet, b.alphabet)
    nb = len(b.alphabet)
    ids: dict[tuple[int, int], int] = {}
    order: list[tuple[int, int]] = []

    def sid(pair):
        i = ids.get(pair)
        if i is None:
            i = ids[pair] = len(order)
            order.append(pair)
            guard(len(order))
        return i

    init = [sid((p, q)) for p in sorted(a.initial) for q in sorted(b.initial)]
    trans = []
    i = 0
    while i < len(order):
        p, q = order[i]
        for s1, t1 in a.succ(p).items():
            for s2, t2 in b.succ(q).items():
                for p2 in t1:
                    for q2 in t2:
                        trans.append((i, s1 * nb + s2, sid((p2, q2))))
        i += 1
    acc = [k for k, (p, q) in enumerate(order) if p in a.accepting and q in b.accepting]
    return Automaton(alpha, len(order), init, acc, trans, a.kind)


def project(a: Automaton, track: int) -> Automaton:
    """Drop track ``track`` (1-based). The result is generally nondeterministic."""
    k = a.alphabet.arity
    if k < 2 or not 1 <= track <= k:
        raise BadTrackIndex(f"track {track} not in 1..{k} (arity must be at least 2)")
    labels: list[str] = []
    relabel = []
    seen: dict[str, int] = {}
    for sid in range(len(a.alphabet)):
        parts = list(a.alphabet.tracks(sid))
        del parts[track - 1]
        lab = "/".join(parts)
        if lab not in seen:
            seen[lab] = len(labels)
            labels.append(lab)
        relabel.append(seen[lab])
    alpha = Alphabet(tuple(labels), k - 1)
    return Automaton(
        alpha, a.n, a.initial, a.accepting, {(p, relabel[s], q) for p, s, q in a.transitions}, a.kind
    )


def relabel(a: Automaton, alphabet: Alphabet, mapping: Sequence[int]) -> Automaton:
    """Rename symbol ``s`` to ``mapping[s]`` in the target alphabet."""
    return Automaton(
        alphabet, a.n, a.initial, a.accepting, {(p, mapping[s], q) for p, s, q in a.transitions}, a.kind, a.co_buchi
    )


def find_isomorphism(a: Automaton, b: Automaton) -> dict[int, int] | None:
    """Bijection between two deterministic automata found by lockstep traversal."""
    if a.alphabet != b.alphabet or a.n != b.n or not (a.deterministic and b.deterministic):
        return None
    m = {a.init: b.init}
    used = {b.init}
    todo = [a.init]
    while todo:
        p = todo.pop()
        q = m[p]
        if (p in a.accepting) != (q in b.accepting):
            return None
        sa, sb = a.succ(p), b.succ(q)
        if sa.keys() != sb.keys():
            return None
        for s, (p2,) in sa.items():
            q2 = sb[s][0]
            if p2 in m:
                if m[p2] != q2:
                    return None
            else:
                if q2 in used:
                    return None
                m[p2] = q2
                used.add(q2)
                todo.append(p2)
    return m if len(m) == a.n else None


def words_up_to(alphabet: Alphabet, n: int) -> Iterator[tuple[int, ...]]:
    """All words of length at most ``n``, shortest first."""
    layer: list[tuple[int, ...]] = [()]
    for _ in range(n + 1):
        yield from layer
        layer = [w + (s,) for w in layer for s in range(len(alphabet))]


def bounded_language(a: Automaton, n: int) -> set[tuple[int, ...]]:
    """Accepted words of length at most ``n`` (by frontier expansion, not enumeration)."""
    out = set()
    frontier = {(): frozenset(a.initial)}
    for depth in range(n + 1):
        nxt = {}
        for w, cur in frontier.items():
            if cur & a.accepting:
                out.add(w)
            if depth == n:
                continue
            for s in range(len(a.alphabet)):
                t = frozenset(q for p in cur for q in a.targets(p, s))
                if t:
                    nxt[w + (s,)] = t
        frontier = nxt
    return out
