"""Weak Buchi automata: SCC analysis, weakness tests, breakpoint
determinization, canonical minimization and complementation."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .automata import (
    _check_same,
    Automaton,
    BoolOp,
    Kind,
    Lasso,
    complete,
    empty_automaton,
    guard,
    partition_refine,
    quotient,
    reachable,
    trim,
)
from .errors import NotDeterministic, NotWeak, NotWeakResult


# ---------------------------------------------------------------------------
# strongly connected components


def tarjan(n: int, succ, nodes: Iterable[int] | None = None) -> list[list[int]]:
    """Iterative Tarjan. Components come out sinks first.

    ``succ(v)`` yields successor ids; restricting to ``nodes`` ignores every
    other vertex.
    """
    allowed = None if nodes is None else set(nodes)
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    out: list[list[int]] = []
    counter = 0
    roots = range(n) if allowed is None else sorted(allowed)
    for root in roots:
        if root in index:
            continue
        work = [(root, iter(succ(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if allowed is not None and w not in allowed:
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                out.append(sorted(comp))
    return out


def _succ_fn(a: Automaton):
    def succ(v):
        for ts in a.succ(v).values():
            yield from ts

    return succ


@dataclass(frozen=True)
class SccDecomposition:
    """Component id per state; component 0 is a sink of the component DAG.

    Transitions never lead from a component to one with a higher id.
    ``status`` is ``"accepting"``, ``"rejecting"`` or ``"mixed"``.
    """

    comp: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    nontrivial: tuple[bool, ...]
    status: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.members)


def scc_decomposition(a: Automaton) -> SccDecomposition:
    comps = tarjan(a.n, _succ_fn(a))
    comp = [0] * a.n
    for i, c in enumerate(comps):
        for q in c:
            comp[q] = i
    nontrivial = []
    for c in comps:
        if len(c) > 1:
            nontrivial.append(True)
        else:
            q = c[0]
            nontrivial.append(any(q in ts for ts in a.succ(q).values()))
    status = []
    for c in comps:
        acc = sum(1 for q in c if q in a.accepting)
        status.append("accepting" if acc == len(c) else "rejecting" if acc == 0 else "mixed")
    return SccDecomposition(tuple(comp), tuple(tuple(c) for c in comps), tuple(nontrivial), tuple(status))


def _has_cycle_within(a: Automaton, nodes: set[int]) -> bool:
    for c in tarjan(a.n, _succ_fn(a), nodes):
        if len(c) > 1 or any(c[0] in ts for ts in a.succ(c[0]).values()):
            return True
    return False


def _cycle_states_within(a: Automaton, nodes: set[int]) -> set[int]:
    out: set[int] = set()
    for c in tarjan(a.n, _succ_fn(a), nodes):
        if len(c) > 1 or any(c[0] in ts for ts in a.succ(c[0]).values()):
            out.update(c)
    return out


def accepting_cycle_states(a: Automaton) -> set[int]:
    """States lying on some accepting cycle (under the automaton's own acceptance)."""
    if a.co_buchi:
        return _cycle_states_within(a, set(a.accepting))
    scc = scc_decomposition(a)
    out: set[int] = set()
    for i, members in enumerate(scc.members):
        if scc.nontrivial[i] and any(q in a.accepting for q in members):
            out.update(members)
    return out


def is_weak(a: Automaton) -> bool:
    scc = scc_decomposition(a)
    return all(st != "mixed" for st in scc.status)


def _mixed_components(a: Automaton) -> list[tuple[int, ...]]:
    scc = scc_decomposition(a)
    live = reachable(a)
    bad = []
    for i, members in enumerate(scc.members):
        if not scc.nontrivial[i] or members[0] not in live:
            continue
        inside = set(members)
        acc = inside & a.accepting
        rej = inside - acc
        if a.co_buchi:
            # accepting cycles stay inside F; any state outside F lies on a rejecting cycle
            if rej and _has_cycle_within(a, acc):
                bad.append(members)
        else:
            if acc and _has_cycle_within(a, rej):
                bad.append(members)
    return bad


def is_inherently_weak(a: Automaton) -> bool:
    """No reachable SCC holds both an accepting and a rejecting cycle."""
    return not _mixed_components(a)


def weaken(a: Automaton) -> Automaton:
    """Mark every SCC accepting exactly when it contains an accepting cycle."""
    if not is_inherently_weak(a):
        raise NotWeak("automaton is not inherently weak")
    scc = scc_decomposition(a)
    acc: set[int] = set()
    for i, members in enumerate(scc.members):
        if not scc.nontrivial[i]:
            continue
        inside = set(members)
        if a.co_buchi:
            good = _has_cycle_within(a, inside & a.accepting)
        else:
            good = bool(inside & a.accepting)
        if good:
            acc |= inside
    return a.replace(accepting=acc, co_buchi=False)


# ---------------------------------------------------------------------------
# lassos


def accepts_lasso(a: Automaton, stem: Sequence[int], loop: Sequence[int]) -> bool:
    """Membership of ``stem loop^omega`` via the product with the lasso's positions."""
    if not loop:
        raise ValueError("empty loop")
    word = tuple(stem) + tuple(loop)
    u, total = len(stem), len(stem) + len(loop)

    def nxt(pos):
        return u if pos + 1 == total else pos + 1

    nodes = {}
    order = []
    for q in sorted(a.initial):
        nodes[(q, 0)] = len(order)
        order.append((q, 0))
        guard(len(order))
    edges: list[list[int]] = []
    i = 0
    while i < len(order):
        q, pos = order[i]
        outs = []
        for r in a.targets(q, word[pos]):
            key = (r, nxt(pos))
            j = nodes.get(key)
            if j is None:
                j = nodes[key] = len(order)
                order.append(key)
                guard(len(order))
            outs.append(j)
        edges.append(outs)
        i += 1
    # only loop positions can lie on cycles
    if a.co_buchi:
        allowed = {k for k, (q, pos) in enumerate(order) if q in a.accepting}
        comps = tarjan(len(order), lambda v: edges[v], allowed)
        return any(len(c) > 1 or c[0] in edges[c[0]] for c in comps)
    for c in tarjan(len(order), lambda v: edges[v]):
        if len(c) > 1 or c[0] in edges[c[0]]:
            if any(order[k][0] in a.accepting for k in c):
                return True
    return False


def _bfs_paths(a: Automaton, sources: Iterable[int], allowed: set[int] | None = None):
    parent: dict[int, tuple[int, int] | None] = {}
    dist: dict[int, int] = {}
    queue = deque()
    for q in sorted(sources):
        if allowed is None or q in allowed:
            parent[q] = None
            dist[q] = 0
            queue.append(q)
    while queue:
        p = queue.popleft()
        for s, ts in a.succ(p).items():
            for q in ts:
                if (allowed is None or q in allowed) and q not in parent:
                    parent[q] = (p, s)
                    dist[q] = dist[p] + 1
                    queue.append(q)
    return parent, dist


def _path_to(parent, q) -> tuple[int, ...]:
    out = []
    while parent[q] is not None:
        q, s = parent[q]
        out.append(s)
    return tuple(reversed(out))


def _shortest_cycle(a: Automaton, q: int, allowed: set[int]) -> tuple[int, ...] | None:
    best = None
    for s, ts in a.succ(q).items():
        for r in ts:
            if r not in allowed:
                continue
            if r == q:
                return (s,)
            parent, dist = _bfs_paths(a, [r], allowed)
            if q in parent:
                cand = (s,) + _path_to(parent, q)
                if best is None or len(cand) < len(best):
                    best = cand
    return best


def find_lasso(a: Automaton) -> Lasso | None:
    """An accepted lasso with shortest stem, then shortest loop, or None."""
    if a.co_buchi:
        region_of = {}
        for c in tarjan(a.n, _succ_fn(a), set(a.accepting)):
            if len(c) > 1 or any(c[0] in ts for ts in a.succ(c[0]).values()):
                for q in c:
                    region_of[q] = set(c)
        candidates = set(region_of)
    else:
        scc = scc_decomposition(a)
        region_of = {}
        for i, members in enumerate(scc.members):
            if scc.nontrivial[i]:
                for q in members:
                    if q in a.accepting:
                        region_of[q] = set(members)
        candidates = set(region_of)
    if not candidates:
        return None
    parent, dist = _bfs_paths(a, a.initial)
    reach = [q for q in candidates if q in dist]
    if not reach:
        return None
    best_d = min(dist[q] for q in reach)
    best = None
    for q in sorted(q for q in reach if dist[q] == best_d):
        loop = _shortest_cycle(a, q, region_of[q])
        if loop is not None and (best is None or len(loop) < len(best[1])):
            best = (q, loop)
    q, loop = best
    return Lasso(_path_to(parent, q), loop)


# ---------------------------------------------------------------------------
# determinization


def determinize_weak(a: Automaton) -> Automaton:
    """Breakpoint construction (subset plus obligation set).

    The output is deterministic and flagged ``co_buchi``: a run is accepting
    when it eventually never meets a breakpoint, i.e. its loop stays in the
    accepting (nonempty obligation) states. Run ``is_inherently_weak`` and
    ``weaken`` to get back to a weak automaton.
    """
    if a.kind is not Kind.WEAK_BUCHI:
        raise TypeError("determinize_weak expects a weak Buchi automaton")
    if a.deterministic and not a.co_buchi:
        return a
    if a.co_buchi:
        raise NotWeak("input is already a co-Buchi determinization")
    if not is_weak(a):
        raise NotWeak("breakpoint determinization needs a weak input")
    a = trim(a)
    F = a.accepting
    nsym = len(a.alphabet)
    start = (frozenset(a.initial), frozenset())
    ids = {start: 0}
    order = [start]
    trans = []
    i = load = 0
    while i < len(order):
        S, O = order[i]
        for s in range(nsym):
            S2 = frozenset(q for p in S for q in a.targets(p, s))
            if not S2:
                continue
            if O:
                O2 = frozenset(q for p in O for q in a.targets(p, s)) & F
            else:
                O2 = S2 & F
            key = (S2, O2)
            j = ids.get(key)
            if j is None:
                j = ids[key] = len(order)
                order.append(key)
                load += len(S2) + len(O2) + 1
                guard(load)
            trans.append((i, s, j))
        i += 1
    acc = [k for k, (S, O) in enumerate(order) if O]
    d = Automaton(a.alphabet, len(order), [0], acc, trans, Kind.WEAK_BUCHI, co_buchi=True)
    return trim(d)


# ---------------------------------------------------------------------------
# minimization


def _loding_colors(a: Automaton) -> list[int]:
    scc = scc_decomposition(a)
    top = 2 * len(scc) + 3
    color = [0] * len(scc)
    for i, members in enumerate(scc.members):
        m = top
        inside = set(members)
        for q in members:
            for ts in a.succ(q).values():
                for r in ts:
                    if r not in inside:
                        m = min(m, color[scc.comp[r]])
        if scc.nontrivial[i]:
            want = 0 if scc.status[i] == "accepting" else 1
            color[i] = m if m % 2 == want else m - 1
        else:
            color[i] = m
    return [color[scc.comp[q]] for q in range(a.n)]


def minimize_weak(a: Automaton) -> Automaton:
    """Canonical minimal weak deterministic automaton (Loding's normal form)."""
    if not a.deterministic:
        raise NotDeterministic("minimize_weak expects a deterministic automaton")
    if not is_weak(a):
        raise NotWeak("minimize_weak expects a weak automaton")
    a = trim(a.replace(co_buchi=False))
    if not a.accepting:
        return empty_automaton(a.alphabet, Kind.WEAK_BUCHI)
    c, sink = complete(a)
    color = _loding_colors(c)
    labels = [x % 2 for x in color]
    table = [[c.step(q, s) for s in range(len(c.alphabet))] for q in range(c.n)]
    block = partition_refine(table, len(c.alphabet), labels)
    even = {block[q] for q in range(c.n) if labels[q] == 0}
    norm = Automaton(c.alphabet, c.n, c.initial, [q for q in range(c.n) if block[q] in even], c.transitions, c.kind)
    return quotient(norm, block, drop={block[sink]})


def weak_canonical(a: Automaton) -> Automaton:
    """Determinize (if needed), weaken and minimize. Raises NotWeakResult."""
    d = a if a.deterministic else determinize_weak(a)
    if d.co_buchi or not is_weak(d):
        if not is_inherently_weak(d):
            raise NotWeakResult(d)
        d = weaken(d)
    return minimize_weak(d)


def _require_weak_det(a: Automaton) -> None:
    if not a.deterministic:
        raise NotDeterministic("expected a deterministic weak automaton")
    if a.co_buchi or not is_weak(a):
        raise NotWeak("expected a weak automaton")


def complement_weak(a: Automaton) -> Automaton:
    _require_weak_det(a)
    c, _ = complete(a)
    return minimize_weak(c.replace(accepting=set(range(c.n)) - c.accepting))


def boolean_weak(op: BoolOp | str, a: Automaton, b: Automaton) -> Automaton:
    """Product of two weak automata (determinized and weakened first if needed)."""
    op = BoolOp(op)
    _check_same(a, b)
    ca, _ = complete(weak_canonical(a))
    cb, _ = complete(weak_canonical(b))
    nsym = len(a.alphabet)
    start = (ca.init, cb.init)
    ids = {start: 0}
    order = [start]
    trans = []
    i = 0
    while i < len(order):
        p, q = order[i]
        for s in range(nsym):
            t = (ca.step(p, s), cb.step(q, s))
            j = ids.get(t)
            if j is None:
                j = ids[t] = len(order)
                order.append(t)
                guard(len(order))
            trans.append((i, s, j))
        i += 1
    fa, fb = ca.accepting, cb.accepting
    if op is BoolOp.UNION:
        acc = [k for k, (p, q) in enumerate(order) if p in fa or q in fb]
    elif op is BoolOp.INTERSECTION:
        acc = [k for k, (p, q) in enumerate(order) if p in fa and q in fb]
    else:
        acc = [k for k, (p, q) in enumerate(order) if p in fa and q not in fb]
    return minimize_weak(Automaton(a.alphabet, len(order), [0], acc, trans, Kind.WEAK_BUCHI))


def omega_language_subset(a: Automaton, b: Automaton):
    """``(L(a) ⊆ L(b), lasso in L(a) minus L(b) or None)``."""
    _check_same(a, b)
    try:
        diff = boolean_weak(BoolOp.DIFFERENCE, a, b)
    except NotWeakResult:
        return _subset_by_product(a, b)
    w = find_lasso(diff)
    return w is None, w


def _subset_by_product(a: Automaton, b: Automaton):
    """Inclusion when one side has no weak deterministic form.

    ``b`` is determinized (co-Buchi) and completed; a run of it rejects
    exactly when it meets nonaccepting states infinitely often. So a lasso
    of ``a`` outside ``b`` is a product cycle holding a nonaccepting
    ``b``-state and meeting ``a``'s own acceptance. The witness is valid
    but not necessarily the shortest.
    """
    d = b if b.deterministic and not b.co_buchi else determinize_weak(b)
    db, _ = complete(d)
    ids: dict[tuple[int, int], int] = {}
    order: list[tuple[int, int]] = []

    def sid(pr):
        j = ids.get(pr)
        if j is None:
            j = ids[pr] = len(order)
            order.append(pr)
            guard(len(order))
        return j

    init = [sid((p, db.init)) for p in sorted(a.initial)]
    trans = []
    i = 0
    while i < len(order):
        p, q = order[i]
        for s, ps in a.succ(p).items():
            q2 = db.step(q, s)
            for p2 in ps:
                trans.append((i, s, sid((p2, q2))))
        i += 1
    prod = Automaton(a.alphabet, len(order), init, [], trans, Kind.WEAK_BUCHI)
    allowed = {k for k, (p, _) in enumerate(order) if p in a.accepting} if a.co_buchi else None
    for comp in tarjan(prod.n, _succ_fn(prod), allowed):
        region = set(comp)
        if len(comp) == 1 and _shortest_cycle(prod, comp[0], region) is None:
            continue
        rej = [k for k in comp if order[k][1] not in db.accepting]
        good = comp if a.co_buchi else [k for k in comp if order[k][0] in a.accepting]
        if not rej or not good:
            continue
        x, y = rej[0], good[0]
        parent, _ = _bfs_paths(prod, prod.initial)
        stem = _path_to(parent, x)
        if x == y:
            loop = _shortest_cycle(prod, x, region)
        else:
            there, _ = _bfs_paths(prod, [x], region)
            back, _ = _bfs_paths(prod, [y], region)
            loop = _path_to(there, y) + _path_to(back, x)
        return False, Lasso(stem, loop)
    return True, None
