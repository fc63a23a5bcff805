"""Length-preserving transducers: automata over pairs of letters."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .automata import (
    Alphabet,
    Automaton,
    BoolOp,
    Kind,
    boolean,
    guard,
    minimize,
    trim,
)
from .errors import AlphabetMismatch
from .weak import boolean_weak, weak_canonical


def pair_alphabet(base: Alphabet) -> Alphabet:
    """``base x base`` in row-major order: ``(a, b)`` has id ``a * |base| + b``."""
    if base.arity != 1:
        raise ValueError("transducers are built over a single-track base alphabet")
    return Alphabet.product(base, base)


def base_of(pairs: Alphabet) -> Alphabet:
    labels: list[str] = []
    for s in range(len(pairs)):
        for t in pairs.tracks(s):
            if t not in labels:
                labels.append(t)
    return Alphabet(tuple(labels))


@dataclass(frozen=True)
class Transducer:
    inner: Automaton

    def __post_init__(self) -> None:
        a = self.inner
        if a.alphabet.arity != 2:
            raise AlphabetMismatch("a transducer needs an arity-2 alphabet")
        base = base_of(a.alphabet)
        full = pair_alphabet(base)
        if a.alphabet != full:
            mapping = [full.id(lab) for lab in a.alphabet.symbols]
            object.__setattr__(
                self,
                "inner",
                Automaton(full, a.n, a.initial, a.accepting, {(p, mapping[s], q) for p, s, q in a.transitions}, a.kind, a.co_buchi),
            )

    @property
    def base(self) -> Alphabet:
        return base_of(self.inner.alphabet)

    @property
    def kind(self) -> Kind:
        return self.inner.kind

    @property
    def n(self) -> int:
        return self.inner.n

    def relates(self, x, y) -> bool:
        """Membership of the pair of finite words ``(x, y)``."""
        b = self.base
        xs, ys = b.encode(x), b.encode(y)
        if len(xs) != len(ys):
            return False
        m = len(b)
        return self.inner.accepts([p * m + q for p, q in zip(xs, ys)])

    def __repr__(self) -> str:
        return f"<Transducer base={self.base.symbols} states={self.n}>"


def canon(a: Automaton) -> Automaton:
    """Canonical minimal form for either kind (weak results must be inherently weak)."""
    if a.kind is Kind.WEAK_BUCHI:
        return weak_canonical(a)
    from .automata import determinize

    return minimize(a if a.deterministic else determinize(a))


def identity(base: Alphabet, kind: Kind = Kind.FINITE_WORD) -> Transducer:
    m = len(base)
    return Transducer(Automaton(pair_alphabet(base), 1, [0], [0], [(0, a * m + a, 0) for a in range(m)], kind))


# ---------------------------------------------------------------------------
# simulation-based dominance (opt-in heuristic)


def simulation(a: Automaton) -> list[set[int]]:
    """``sim[p]``: the states that simulate ``p`` (finite-word acceptance).

    Naive greatest-fixpoint refinement; only used on small factors.
    """
    n = a.n
    sim = [set(q for q in range(n) if p not in a.accepting or q in a.accepting) for p in range(n)]
    changed = True
    while changed:
        changed = False
        for p in range(n):
            for q in list(sim[p]):
                ok = True
                for s, ps in a.succ(p).items():
                    qs = a.targets(q, s)
                    for p2 in ps:
                        if not any(q2 in sim[p2] for q2 in qs):
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    sim[p].discard(q)
                    changed = True
    return sim


def dominance_reduce(subset: Iterable[tuple[int, int]], sim1: list[set[int]], sim2: list[set[int]]) -> frozenset:
    """Drop pairs dominated by another member, judged factor by factor."""
    items = sorted(set(subset))
    keep = []
    for x in items:
        dominated = False
        for y in items:
            if y == x:
                continue
            if y[0] in sim1[x[0]] and y[1] in sim2[x[1]]:
                mutual = x[0] in sim1[y[0]] and x[1] in sim2[y[1]]
                if not mutual or y < x:
                    dominated = True
                    break
        if not dominated:
            keep.append(x)
    return frozenset(keep)


# ---------------------------------------------------------------------------
# pair products


def _live_pairs(start, moves, accepting) -> set:
    """Pairs reachable from ``start`` that can still reach an accepting pair.

    Two live states need not be live together (say, when they need inputs
    of different lengths); dropping such pairs early keeps subsets small.
    """
    seen = {start}
    back: dict = {}
    todo = [start]
    while todo:
        pr = todo.pop()
        for _, nxt in moves(pr):
            back.setdefault(nxt, []).append(pr)
            if nxt not in seen:
                seen.add(nxt)
                guard(len(seen))
                todo.append(nxt)
    live = {pr for pr in seen if accepting(pr)}
    todo = list(live)
    while todo:
        for pr in back.get(todo.pop(), ()):
            if pr not in live:
                live.add(pr)
                todo.append(pr)
    return live


def _pair_product(
    alphabet: Alphabet,
    kind: Kind,
    start: tuple[int, int],
    moves: Callable[[tuple[int, int]], Iterator[tuple[int, tuple[int, int]]]],
    accepting: Callable[[tuple[int, int]], bool],
    reduce: Callable[[frozenset], frozenset] | None = None,
) -> Automaton:
    """Determinized (finite-word) or plain nondeterministic (weak) product."""
    if kind is Kind.WEAK_BUCHI:
        ids = {start: 0}
        order = [start]
        trans = []
        i = 0
        while i < len(order):
            for s, pair in moves(order[i]):
                j = ids.get(pair)
                if j is None:
                    j = ids[pair] = len(order)
                    order.append(pair)
                    guard(len(order))
                trans.append((i, s, j))
            i += 1
        acc = [k for k, pr in enumerate(order) if accepting(pr)]
        return Automaton(alphabet, len(order), [0], acc, trans, kind)
    live = _live_pairs(start, moves, accepting)
    if start not in live:
        return Automaton(alphabet, 1, [0], [], [], kind)
    first = frozenset([start])
    ids2 = {first: 0}
    order2 = [first]
    trans = []
    i = load = 0
    while i < len(order2):
        out: dict[int, set] = {}
        for pr in order2[i]:
            for s, pair in moves(pr):
                if pair in live:
                    out.setdefault(s, set()).add(pair)
        for s in sorted(out):
            sub = frozenset(out[s])
            if reduce is not None:
                sub = reduce(sub)
            j = ids2.get(sub)
            if j is None:
                j = ids2[sub] = len(order2)
                order2.append(sub)
                load += len(sub) + 1
                guard(load)
            trans.append((i, s, j))
        i += 1
    acc = [k for k, sub in enumerate(order2) if any(accepting(pr) for pr in sub)]
    return Automaton(alphabet, len(order2), [0], acc, trans, kind)


def _check_pair(t1: Transducer, t2: Transducer) -> None:
    if t1.inner.alphabet != t2.inner.alphabet:
        raise AlphabetMismatch("transducers over different alphabets")
    if t1.kind is not t2.kind:
        raise AlphabetMismatch("transducers of different kinds")


def _by_input(a: Automaton, m: int) -> list[dict[int, list[tuple[int, int]]]]:
    """Per state: first-track letter -> [(second-track letter, target)]."""
    out = []
    for q in range(a.n):
        d: dict[int, list[tuple[int, int]]] = {}
        for s, ts in a.succ(q).items():
            x, y = divmod(s, m)
            for r in ts:
                d.setdefault(x, []).append((y, r))
        out.append(d)
    return out


def compose_raw(t2: Transducer, t1: Transducer, dominance: bool = False) -> Automaton:
    """Product of ``t1`` then ``t2`` matching the middle letter, before minimization."""
    _check_pair(t1, t2)
    a1, a2 = t1.inner, t2.inner
    m = len(t1.base)
    m1, m2 = _by_input(a1, m), _by_input(a2, m)
    starts = [(p, q) for p in sorted(a1.initial) for q in sorted(a2.initial)]
    if len(starts) != 1:
        a1 = canon(a1)
        a2 = canon(a2)
        return compose_raw(Transducer(a2), Transducer(a1), dominance)

    def moves(pr):
        q1, q2 = pr
        row2 = m2[q2]
        for x, lst in m1[q1].items():
            for c, r1 in lst:
                for y, r2 in row2.get(c, ()):
                    yield x * m + y, (r1, r2)

    reduce = None
    if dominance and a1.kind is Kind.FINITE_WORD:
        s1, s2 = simulation(a1), simulation(a2)
        reduce = lambda sub: dominance_reduce(sub, s1, s2)  # noqa: E731
    return _pair_product(
        a1.alphabet,
        a1.kind,
        starts[0],
        moves,
        lambda pr: pr[0] in a1.accepting and pr[1] in a2.accepting,
        reduce,
    )


def compose(t2: Transducer, t1: Transducer, dominance: bool = False) -> Transducer:
    """The relation ``t2 ∘ t1``: apply ``t1`` first.

    Weak inputs whose composition is not inherently weak raise NotWeakResult.
    """
    return Transducer(canon(compose_raw(t2, t1, dominance)))


def image(t: Transducer, a: Automaton) -> Automaton:
    """``{y | (x, y) in t, x in L(a)}``, canonical minimal."""
    if a.alphabet != t.base:
        raise AlphabetMismatch("automaton alphabet differs from the transducer's base alphabet")
    if a.kind is not t.kind:
        raise AlphabetMismatch("automaton and transducer of different kinds")
    at = t.inner
    if len(at.initial) != 1 or len(a.initial) != 1:
        at = canon(at)
        a = canon(a)
    m = len(t.base)
    mt = _by_input(at, m)

    def moves(pr):
        p, q = pr
        row = mt[q]
        for x, ps in a.succ(p).items():
            for y, r in row.get(x, ()):
                for p2 in ps:
                    yield y, (p2, r)

    raw = _pair_product(
        a.alphabet,
        a.kind,
        (a.init, at.init),
        moves,
        lambda pr: pr[0] in a.accepting and pr[1] in at.accepting,
    )
    return canon(raw)


def reflexive(t: Transducer) -> Transducer:
    """``T ∪ T_id``."""
    ident = identity(t.base, t.kind).inner
    if t.kind is Kind.WEAK_BUCHI:
        return Transducer(boolean_weak(BoolOp.UNION, t.inner, ident))
    return Transducer(minimize(boolean(BoolOp.UNION, t.inner, ident)))


def union(t1: Transducer, t2: Transducer) -> Transducer:
    _check_pair(t1, t2)
    if t1.kind is Kind.WEAK_BUCHI:
        return Transducer(boolean_weak(BoolOp.UNION, t1.inner, t2.inner))
    return Transducer(minimize(boolean(BoolOp.UNION, t1.inner, t2.inner)))


def is_reflexive(t: Transducer) -> bool:
    from .automata import language_subset
    from .weak import omega_language_subset

    ident = identity(t.base, t.kind).inner
    if t.kind is Kind.WEAK_BUCHI:
        return omega_language_subset(ident, t.inner)[0]
    return language_subset(ident, t.inner)[0]


# ---------------------------------------------------------------------------
# powers and sampling


@dataclass(frozen=True)
class SamplingStrategy:
    """Which powers to sample: ``linear`` a*k, ``exp`` a**k, or an explicit list."""

    kind: str
    param: int = 1
    values: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind == "linear":
            if self.param < 1:
                raise ValueError("linear sampling needs a step of at least 1")
        elif self.kind == "exp":
            if self.param < 2:
                raise ValueError("exponential sampling needs a base of at least 2")
        elif self.kind == "explicit":
            vals = tuple(self.values)
            if not vals or any(v < 1 for v in vals) or any(b <= a for a, b in zip(vals, vals[1:])):
                raise ValueError("explicit sampling must be strictly increasing positive integers")
            object.__setattr__(self, "values", vals)
        else:
            raise ValueError(f"unknown sampling kind {self.kind!r}")

    @classmethod
    def linear(cls, a: int = 1) -> "SamplingStrategy":
        return cls("linear", a)

    @classmethod
    def exponential(cls, a: int = 2) -> "SamplingStrategy":
        return cls("exp", a)

    @classmethod
    def explicit(cls, values: Iterable[int]) -> "SamplingStrategy":
        return cls("explicit", 1, tuple(values))

    @classmethod
    def parse(cls, text: str) -> "SamplingStrategy":
        kind, _, arg = text.strip().partition(":")
        kind = {"lin": "linear", "exponential": "exp"}.get(kind, kind)
        if kind not in ("linear", "exp", "explicit"):
            raise ValueError(f"{text!r}: expected linear:A, exp:B or explicit:N1,N2,...")
        try:
            if kind == "explicit":
                return cls.explicit(int(v) for v in arg.split(","))
            return cls(kind, int(arg) if arg else (2 if kind == "exp" else 1))
        except ValueError as exc:
            if "invalid literal" in str(exc):
                raise ValueError(f"{text!r}: parameters must be integers") from None
            raise

    def nth(self, k: int) -> int:
        """The k-th sample exponent, k starting at 1."""
        if k < 1:
            raise ValueError("sample indices start at 1")
        if self.kind == "linear":
            return self.param * k
        if self.kind == "exp":
            return self.param**k
        return self.values[k - 1]

    def __iter__(self) -> Iterator[int]:
        if self.kind == "explicit":
            return iter(self.values)
        return (self.nth(k) for k in itertools.count(1))

    def __str__(self) -> str:
        if self.kind == "explicit":
            return "explicit:" + ",".join(map(str, self.values))
        return f"{self.kind}:{self.param}"


@dataclass
class PowerSeries:
    """Cache of powers of a reflexive transducer, computed by composition.

    With ``nonreflexive`` set, doubling steps use
    ``T0^(2s) = (T0^s ∘ T^s) ∪ T0^s`` and keep the plain powers of ``T``
    alongside. ``peak`` is the largest minimal power of ``t0`` computed so far;
    ``peak_any`` also counts the auxiliary compositions.
    """

    t0: Transducer
    plain: Transducer | None = None
    nonreflexive: bool = False
    dominance: bool = False
    cache: dict[int, Transducer] = field(default_factory=dict)
    plain_cache: dict[int, Transducer] = field(default_factory=dict)
    peak: int = 0
    peak_any: int = 0
    compositions: int = 0

    def __post_init__(self) -> None:
        self.cache.setdefault(1, self.t0)
        self.peak = max(self.peak, self.t0.n)
        self.peak_any = max(self.peak_any, self.peak)
        if self.plain is not None:
            self.plain_cache.setdefault(1, self.plain)

    def _compose(self, t2: Transducer, t1: Transducer) -> Transducer:
        out = compose(t2, t1, self.dominance)
        self.compositions += 1
        self.peak_any = max(self.peak_any, out.n)
        return out

    def _plain(self, n: int) -> Transducer:
        if n in self.plain_cache:
            return self.plain_cache[n]
        h = n // 2
        if n % 2 == 0:
            out = self._compose(self._plain(h), self._plain(h))
        else:
            out = self._compose(self._plain(1), self._plain(n - 1))
        self.plain_cache[n] = out
        return out

    def get(self, n: int) -> Transducer:
        if n < 1:
            raise ValueError("powers start at 1")
        if n in self.cache:
            return self.cache[n]
        if self.nonreflexive and self.plain is not None and n % 2 == 0:
            h = n // 2
            half = self.get(h)
            left = self._compose(half, self._plain(h))
            if left.kind is Kind.WEAK_BUCHI:
                out = Transducer(boolean_weak(BoolOp.UNION, left.inner, half.inner))
            else:
                out = Transducer(minimize(boolean(BoolOp.UNION, left.inner, half.inner)))
        else:
            m = max(k for k in self.cache if k < n)
            if 2 * m < n:
                # climb by squaring first so long gaps stay logarithmic
                m = 1 << (n.bit_length() - 1)
                if m == n:
                    m = n // 2
            out = self._compose(self.get(n - m), self.get(m))
        self.peak = max(self.peak, out.n)
        self.peak_any = max(self.peak_any, out.n)
        self.cache[n] = out
        return out


def power(t0: Transducer, n: int, nonreflexive_opt: bool = False, base: Transducer | None = None) -> Transducer:
    """``t0^n`` by repeated squaring. ``base`` is the plain T when using the nonreflexive identity."""
    return PowerSeries(t0, plain=base, nonreflexive=nonreflexive_opt and base is not None).get(n)


def bounded_pairs(t: Transducer, n: int) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All related pairs of words of length at most ``n``."""
    from .automata import bounded_language

    m = len(t.base)
    out = set()
    for w in bounded_language(t.inner, n):
        out.add((tuple(s // m for s in w), tuple(s % m for s in w)))
    return out
