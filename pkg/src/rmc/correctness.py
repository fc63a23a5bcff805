"""Is the extrapolation safe (contains every power) and precise (nothing more)?

Both checks are sufficient conditions only. Safety may fail with a real
counterexample to the inclusion; preciseness never fails outright, it either
holds or cannot be established.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .automata import Automaton, Kind, Lasso, language_subset
from .counters import (
    CounterAutomaton,
    counter_composition,
    counter_image,
    counter_intersection,
    counter_moved,
    counter_project,
    counter_project_all_but,
    counter_union_extended,
    counter_zero,
    extended_equal,
    max_increment,
    restrict_greater,
    restricted_chain,
)
from .errors import NotWeakResult
from .extrapolate import Extrapolation
from .transducer import Transducer, compose, image
from .verdicts import CriterionFails, CriterionHolds, Inconclusive, Reason, Verdict
from .weak import omega_language_subset


@dataclass
class CheckReport:
    name: str
    verdict: Verdict
    sizes: dict[str, int] = field(default_factory=dict)
    sync_bound: int | None = None
    seconds: float = 0.0
    alphabet: object = None

    @property
    def holds(self) -> bool:
        return isinstance(self.verdict, CriterionHolds)

    def witness_text(self) -> str | None:
        if not isinstance(self.verdict, CriterionFails):
            return None
        w = self.verdict.witness
        if isinstance(w, Lasso):
            return w.labels(self.alphabet) if self.alphabet else f"{w.stem} ({w.loop})^w"
        if self.alphabet is not None:
            return " ".join(self.alphabet.decode(w)) or "ε"
        return " ".join(map(str, w)) or "ε"

    def to_text(self) -> str:
        lines = [f"check {self.name}", f"verdict {self.verdict}"]
        if isinstance(self.verdict, Inconclusive):
            lines.append(f"reason {self.verdict.reason}")
            if self.verdict.detail:
                lines.append(f"detail {self.verdict.detail}")
        w = self.witness_text()
        if w is not None:
            lines.append(f"witness {w}")
        if self.sizes:
            lines.append("sizes " + " ".join(f"{k}={v}" for k, v in sorted(self.sizes.items())))
        if self.sync_bound is not None:
            lines.append(f"M {self.sync_bound}")
        lines.append(f"time {self.seconds:.3f}")
        lines.append("end")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "CheckReport":
        """Reads back the fields that survive serialization (witness as text)."""
        fields: dict[str, str] = {}
        for line in text.splitlines():
            key, _, rest = line.partition(" ")
            fields[key] = rest
        v = fields.get("verdict", "")
        if v == "CriterionHolds":
            verdict: Verdict = CriterionHolds()
        elif v == "CriterionFails":
            verdict = CriterionFails(fields.get("witness", ""))
        else:
            verdict = Inconclusive(Reason(fields["reason"]), fields.get("detail", ""))
        sizes = {}
        for kv in fields.get("sizes", "").split():
            k, _, val = kv.partition("=")
            sizes[k] = int(val)
        m = fields.get("M")
        return cls(fields["check"], verdict, sizes, int(m) if m else None, float(fields.get("time", 0)))


def _subset(a: Automaton, b: Automaton):
    if a.kind is Kind.WEAK_BUCHI:
        return omega_language_subset(a, b)
    return language_subset(a, b)


def check_safety_closure(t_star: Transducer) -> CheckReport:
    """Holds iff composing the candidate with itself stays inside it."""
    t0 = time.perf_counter()
    try:
        tt = compose(t_star, t_star)
    except NotWeakResult as exc:
        return CheckReport("safety-closure", Inconclusive(Reason.NOT_INHERENTLY_WEAK, str(exc)),
                           {"candidate": t_star.n}, None, time.perf_counter() - t0, t_star.inner.alphabet)
    ok, witness = _subset(tt.inner, t_star.inner)
    verdict = CriterionHolds() if ok else CriterionFails(witness)
    return CheckReport("safety-closure", verdict, {"candidate": t_star.n, "squared": tt.n}, None,
                       time.perf_counter() - t0, t_star.inner.alphabet)


def check_safety_reach(t: Transducer, a_star: Automaton) -> CheckReport:
    """Holds iff one more step of ``t`` stays inside the candidate."""
    t0 = time.perf_counter()
    try:
        img = image(t, a_star)
    except NotWeakResult as exc:
        return CheckReport("safety-reach", Inconclusive(Reason.NOT_INHERENTLY_WEAK, str(exc)),
                           {"candidate": a_star.n}, None, time.perf_counter() - t0, a_star.alphabet)
    ok, witness = _subset(img, a_star)
    verdict = CriterionHolds() if ok else CriterionFails(witness)
    return CheckReport("safety-reach", verdict, {"candidate": a_star.n, "image": img.n}, None,
                       time.perf_counter() - t0, a_star.alphabet)


def _finish(name: str, counted: CounterAutomaton, left: CounterAutomaton, zero: CounterAutomaton,
            m: int, started: float, sizes: dict[str, int]) -> CheckReport:
    """Union the zero layer into ``left`` and compare with the counted extrapolation.

    Runs of ``left`` whose counter never moved are dropped first: the
    synchroniser lets them through, and keeping them would let words counted
    0 pass without being in the zero layer.
    """
    left = counter_moved(left)
    lhs = counter_union_extended(left, zero)
    sizes = dict(sizes, restricted=left.n)
    try:
        verdict = extended_equal(lhs, counted)
    except NotWeakResult as exc:
        verdict = Inconclusive(Reason.NOT_INHERENTLY_WEAK, str(exc))
    if isinstance(verdict, Inconclusive) and verdict.reason is Reason.EXTENDED_LANGUAGE_GAP and not left.accepting:
        verdict = Inconclusive(Reason.SYNCHRONIZATION_LOSS, "every run was dropped by the synchronisation")
    return CheckReport(name, verdict, sizes, m, time.perf_counter() - started, counted.alphabet)


def default_bound(ext: Extrapolation, multiplier: int = 2) -> int:
    return max(1, multiplier * max(ext.grow.diameter, max_increment(ext.counted)))


def check_preciseness_closure(ext: Extrapolation, m: int | None = None, *, copies: int = 2,
                              step: Transducer | None = None, staged: bool = False) -> CheckReport:
    """Every pair counted i must come from pairs counted below i.

    With ``step`` unset, the candidate at level i is checked against the
    composition of ``copies`` candidates at lower levels (exponential
    sampling). With ``step`` (the transducer applied between two linear
    samples) it is checked against ``step`` after one lower level.

    ``staged`` builds the composition, intersection and restriction one
    after the other instead of in one product; the answer is the same.
    """
    started = time.perf_counter()
    m = default_bound(ext) if m is None else m
    tc = ext.counted
    sizes = {"counted": tc.n}
    if step is None and copies < 2:
        raise ValueError("need at least two copies to compose")
    if not staged:
        chain = [(tc, True)] * copies if step is None else [(counter_zero(step.inner), False), (tc, True)]
        left = restricted_chain(tc, chain, m)
        return _finish("preciseness-closure", tc, left, ext.zero_layer, m, started, sizes)
    if step is None:
        comp = tc
        for _ in range(copies - 1):
            comp = counter_composition(comp, tc)
        others = list(range(2, copies + 2))
    else:
        comp = counter_project(counter_composition(counter_zero(step.inner), tc), 1)
        others = [2]
    sizes["composed"] = comp.n
    joint = counter_intersection(tc, comp)
    restricted = restrict_greater(joint, 1, others, m)
    left = counter_project_all_but(restricted, [1])
    return _finish("preciseness-closure", tc, left, ext.zero_layer, m, started, sizes)


def check_preciseness_reach(t: Transducer, ext: Extrapolation, m: int | None = None, *,
                            staged: bool = False) -> CheckReport:
    """Every word counted i must be a ``t``-successor of a word counted below i."""
    started = time.perf_counter()
    m = default_bound(ext) if m is None else m
    ac = ext.counted
    if not staged:
        left = restricted_chain(ac, [(ac, True), (counter_zero(t.inner), False)], m)
        return _finish("preciseness-reach", ac, left, ext.zero_layer, m, started, {"counted": ac.n})
    img = counter_image(t, ac)
    joint = counter_intersection(ac, img)
    restricted = restrict_greater(joint, 1, [2], m)
    left = counter_project(restricted, 2)
    return _finish("preciseness-reach", ac, left, ext.zero_layer, m, started, {"counted": ac.n, "image": img.n})
