"""Incrementally growing sequences with a known limit, for the extrapolation tests.

Chain families are the languages u v^n w (finite words) and u v^n w z^omega
(weak), sampled at n0, n0 + p, n0 + 2p. Their true next members are known,
which gives a second ground truth next to the insertion construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from rmc.automata import Alphabet, Automaton, Kind, determinize, minimize
from rmc.builders import affine_relation, initial_token_ring, token_ring
from rmc.errors import NotGrowing
from rmc.increments import GrowDecomposition, decompose
from rmc.transducer import PowerSeries, image, power, reflexive
from rmc.weak import weak_canonical


@dataclass
class Family:
    name: str
    seq: list[Automaton]
    # member(i) = the automaton i steps after the last sample, when known
    member: Callable[[int], Automaton] | None = None

    def grow(self) -> GrowDecomposition:
        return decompose(self.seq)


def chain(alpha: Alphabet, u, v, w, n: int) -> Automaton:
    word = list(u) + list(v) * n + list(w)
    trans = [(i, s, i + 1) for i, s in enumerate(word)]
    return minimize(determinize(Automaton(alpha, len(word) + 1, [0], [len(word)], trans)))


def weak_chain(alpha: Alphabet, u, v, w, z, n: int) -> Automaton:
    word = list(u) + list(v) * n + list(w)
    m = len(word)
    trans = [(i, s, i + 1) for i, s in enumerate(word)] + [(m, s, m) for s in z]
    return weak_canonical(Automaton(alpha, m + 1, [0], [m], trans, Kind.WEAK_BUCHI))


def _usable(seq) -> bool:
    try:
        return decompose(seq).k >= 2
    except NotGrowing:
        return False


def chain_families(count: int, seed: int = 1, weak: bool = False) -> list[Family]:
    rng = random.Random(seed)
    out: list[Family] = []
    seen = set()
    while len(out) < count:
        k = rng.choice([2, 3])
        alpha = Alphabet(tuple("abc"[:k]))

        def rw(lo, hi):
            return tuple(rng.randrange(k) for _ in range(rng.randint(lo, hi)))

        if weak:
            u, v, w, z = rw(0, 1), rw(1, 2), rw(0, 1), tuple(sorted(set(rw(1, 2))))
        else:
            u, v, w, z = rw(0, 2), rw(1, 2), rw(0, 2), ()
        p, n0 = rng.choice([1, 2]), rng.randint(0, 1 if weak else 2)
        key = (k, u, v, w, z, p, n0)
        if key in seen:
            continue
        seen.add(key)

        def make(n, alpha=alpha, u=u, v=v, w=w, z=z):
            return weak_chain(alpha, u, v, w, z, n) if weak else chain(alpha, u, v, w, n)

        seq = [make(n0 + j * p) for j in range(3)]
        if not _usable(seq):
            continue
        name = f"{'weak' if weak else 'chain'} k={k} u={u} v={v} w={w} z={z} p={p} n0={n0}"
        out.append(Family(name, seq, lambda i, make=make, n0=n0, p=p: make(n0 + (2 + i) * p)))
    return out


def guard_family(k: int) -> Automaton:
    """x a^(k-1) then a c-loop: x a^j c^omega for j < k."""
    x, a, c = 0, 1, 2
    top = k + 1
    trans = [(0, x, 1)] + [(l, a, l + 1) for l in range(1, k)] + [(l, c, top) for l in range(1, k + 1)]
    trans.append((top, c, top))
    return weak_canonical(Automaton(Alphabet.of("x", "a", "c"), k + 2, [0], [top], trans, Kind.WEAK_BUCHI))


def token_ring_windows() -> list[Family]:
    t0, a = reflexive(token_ring()), initial_token_ring()
    samples = [image(power(t0, k), a) for k in range(1, 7)]
    return [Family(f"token ring reach samples {lo + 1}..{hi}", samples[lo:hi])
            for lo in range(4) for hi in range(lo + 3, 7)]


def plus_one_windows() -> list[Family]:
    out = []
    for msb in (True, False):
        t = affine_relation(1, msb_first=msb)
        ps = PowerSeries(reflexive(t), plain=t, nonreflexive=True)
        samples = [ps.get(2**k).inner for k in range(1, 6)]
        for lo in range(3):
            if _usable(samples[lo:lo + 3]):
                out.append(Family(f"(x,x+1) {'msb' if msb else 'lsb'} powers 2^{lo + 1}..2^{lo + 3}",
                                  samples[lo:lo + 3]))
    return out


# ---------------------------------------------------------------------------
# the ground-truth check shared by the extrapolation and acceptance tests


def _finite_problems(fam: Family, ext, ins, max_len: int) -> list[str]:
    from oracles import bounded, counter_runs

    out = []
    lang = [bounded(ins(i), max_len) for i in range(9)]
    # words needing five or more inserted increments must not fit in the bound
    extra = set().union(*lang[5:]) - set().union(*lang[:5])
    bound = min([max_len] + [len(w) - 1 for w in extra])
    upto4 = {w for ws in lang[:5] for w in ws if len(w) <= bound}
    got = bounded(ext.plain, bound)
    if got != upto4:
        out.append(f"bounded language differs at length <= {bound}: {sorted(got ^ upto4)[:3]}")
    sample = counter_runs(ext.counted, bound)
    for w, (j,) in sample:
        if w not in (lang[j] if j < len(lang) else bounded(ins(j), bound)):
            out.append(f"contract 1: {w} counted {j} is not in member {j}")
    for i in range(5):
        for w in lang[i]:
            if len(w) > bound:
                continue
            if not any(w2 == w and j <= i for w2, (j,) in sample):
                out.append(f"contract 2: {w} in member {i} has no count <= {i}")
            if w not in lang[0] and (w, (0,)) in sample:
                out.append(f"contract 3: {w} is new in member {i} but counted 0")
    return out


def _weak_problems(fam: Family, ext, ins, max_stem: int, max_loop: int) -> list[str]:
    from oracles import counter_lasso_values, lasso_language

    out = []
    cache: dict[int, set] = {}

    def member(j):
        if j not in cache:
            cache[j] = lasso_language(ins(j), max_stem, max_loop)
        return cache[j]

    lang = [member(i) for i in range(5)]
    union = set().union(*lang)
    got = lasso_language(ext.plain, max_stem, max_loop)
    if got != union:
        out.append(f"lasso language differs: {sorted(got ^ union)[:3]}")
    for u, v in got | union:
        counts = {j for (j,) in counter_lasso_values(ext.counted, u, v)}
        for j in counts:
            if (u, v) not in member(j):
                out.append(f"contract 1: {u}({v})^w counted {j} is not in member {j}")
        for i in range(5):
            if (u, v) in lang[i]:
                if not any(j <= i for j in counts):
                    out.append(f"contract 2: {u}({v})^w in member {i} has no count <= {i}")
                if (u, v) not in lang[0] and 0 in counts:
                    out.append(f"contract 3: {u}({v})^w is new in member {i} but counted 0")
    return out


def extrapolation_problems(fam: Family, max_len: int = 8, max_stem: int = 3, max_loop: int = 2) -> list[str]:
    """Everything that disagrees between an extrapolation and its ground truths."""
    from oracles import lasso_language

    from rmc.automata import language_equal
    from rmc.counters import counterless, is_run_bounded
    from rmc.extrapolate import extrapolate, insert_increments

    g = fam.grow()
    origin = g.automaton
    ext = extrapolate(origin, g)
    built: dict[int, Automaton] = {}

    def ins(i):
        if i not in built:
            built[i] = insert_increments(origin, g, i)
        return built[i]

    weak = origin.kind is Kind.WEAK_BUCHI
    out = []
    if counterless(ext.counted) != ext.plain:
        out.append("counterless form differs from the plain extrapolation")
    if weak and not is_run_bounded(ext.counted):
        out.append("weak counted extrapolation is not run-bounded")
    if fam.member is not None:
        for i in range(1, 4):
            want = fam.member(i)
            same = (lasso_language(ins(i), max_stem, max_loop) == lasso_language(want, max_stem, max_loop)
                    if weak else language_equal(ins(i), want))
            if not same:
                out.append(f"inserting {i} increments does not give the next family member")
    if weak:
        out += _weak_problems(fam, ext, ins, max_stem, max_loop)
    else:
        out += _finite_problems(fam, ext, ins, max_len)
    return out
