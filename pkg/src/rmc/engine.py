"""The driver: sample powers, look for growth, extrapolate, check, repeat."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Union

from .automata import Automaton, state_budget
from .correctness import (
    CheckReport,
    check_preciseness_closure,
    check_preciseness_reach,
    check_safety_closure,
    check_safety_reach,
    default_bound,
)
from .errors import NotGrowing, NotWeakResult, RmcError, StateLimitExceeded
from .extrapolate import Extrapolation, extrapolate
from .increments import (
    communication_equivalent,
    communication_stable,
    decompose_pair_aware,
    previous_decomposition,
)
from .transducer import PowerSeries, SamplingStrategy, Transducer, image, reflexive
from .verdicts import CriterionHolds, Inconclusive, Reason

log = logging.getLogger("rmc")


@dataclass
class RunConfig:
    mode: str = "closure"
    sampling: SamplingStrategy = field(default_factory=SamplingStrategy.linear)
    max_samples: int = 12
    max_states: int = 5000
    max_seconds: float = 300.0
    sync_mult: int = 2
    # heuristics: subset pruning by simulation (slow on large powers) and
    # doubling through plain powers of T
    dominance: bool = False
    nonreflexive: bool = True
    # smallest window of samples handed to the decomposer
    min_window: int = 3
    # what one construction may hold before minimizing: states plus subset members
    construction_limit: int = 2_000_000
    # insist that I0 and I1 of the sample already leave alike before extrapolating
    strict_equivalence: bool = False
    # called with every new sample; return False to stop early
    on_sample: Callable[[int, Automaton], bool] | None = None

    def __post_init__(self) -> None:
        if self.mode not in ("closure", "reach"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if min(self.max_samples, self.max_states, self.construction_limit) < 1 or self.max_seconds <= 0:
            raise ValueError("resource caps must be positive")
        if self.sync_mult < 1:
            raise ValueError("sync multiplier must be at least 1")
        if self.min_window < 3:
            raise ValueError("windows need at least three samples")


@dataclass(frozen=True)
class ExactClosure:
    automaton: Automaton
    code = 0


@dataclass(frozen=True)
class SafeOverApproximation:
    automaton: Automaton
    code = 2


@dataclass(frozen=True)
class GaveUp:
    reason: str
    code = 3


Outcome = Union[ExactClosure, SafeOverApproximation, GaveUp]


@dataclass
class Attempt:
    window: tuple[int, int]
    decomposition: str
    result_states: int | None
    reports: list[CheckReport]
    note: str = ""


@dataclass
class Iteration:
    index: int
    exponent: int
    states: int
    attempts: list[Attempt] = field(default_factory=list)


@dataclass
class EngineResult:
    outcome: Outcome
    trace: list[Iteration]
    peak: int
    seconds: float
    extrapolation: Extrapolation | None = None
    peak_any: int = 0

    @property
    def automaton(self) -> Automaton | None:
        return getattr(self.outcome, "automaton", None)

    def summary(self) -> str:
        o = self.outcome
        head = type(o).__name__
        if isinstance(o, GaveUp):
            head += f" ({o.reason})"
        else:
            head += f" states={o.automaton.n}"
        lines = [head, f"samples {' '.join(f'{it.exponent}:{it.states}' for it in self.trace)}",
                 f"peak {self.peak} (any intermediate {self.peak_any})", f"time {self.seconds:.3f}"]
        return "\n".join(lines) + "\n"


class _Budget(Exception):
    pass


class _Run:
    def __init__(self, t: Transducer, a: Automaton | None, cfg: RunConfig):
        self.cfg = cfg
        self.t = t
        self.a = a
        self.t0 = reflexive(t)
        self.series = PowerSeries(self.t0, plain=t if cfg.nonreflexive else None,
                                  nonreflexive=cfg.nonreflexive, dominance=cfg.dominance)
        self.samples: list[Automaton] = []
        self.exponents: list[int] = []
        self.trace: list[Iteration] = []
        self.started = time.perf_counter()
        self.peak = 0
        self.peak_any = 0
        self.safe: tuple[Automaton, Extrapolation | None] | None = None

    def elapsed(self) -> float:
        return time.perf_counter() - self.started

    def budget(self) -> None:
        if self.elapsed() > self.cfg.max_seconds:
            raise _Budget(f"time cap {self.cfg.max_seconds:g}s reached")

    def note(self, n: int) -> None:
        self.peak_any = max(self.peak_any, n)
        if n > self.cfg.max_states:
            raise _Budget(f"state cap {self.cfg.max_states} reached ({n} states)")

    # -- samples ------------------------------------------------------------
    def sample(self, e: int) -> Automaton:
        try:
            return self._sample(e)
        except StateLimitExceeded as exc:
            raise _Budget(f"sample {e}: {exc}") from None

    def _sample(self, e: int) -> Automaton:
        if self.cfg.mode == "closure":
            out = self.series.get(e).inner
        elif not self.samples:
            out = image(self.series.get(e), self.a)
        else:
            out = image(self.series.get(e - self.exponents[-1]), self.samples[-1])
        # peak: largest power (or sample) built; candidates and helper compositions only reach peak_any
        self.peak = max(self.peak, self.series.peak, out.n)
        self.note(self.series.peak_any)
        self.note(out.n)
        return out

    # -- checks ---------------------------------------------------------------
    def safety(self, cand: Automaton) -> CheckReport:
        if self.cfg.mode == "closure":
            return check_safety_closure(Transducer(cand))
        return check_safety_reach(self.t0, cand)

    def step_transducer(self) -> Transducer | None:
        s = self.cfg.sampling
        if s.kind == "linear":
            return self.series.get(s.param)
        return None

    def preciseness(self, ext: Extrapolation, mult: int) -> CheckReport:
        m = default_bound(ext, mult)
        s = self.cfg.sampling
        if self.cfg.mode == "closure":
            if s.kind == "exp":
                return check_preciseness_closure(ext, m, copies=s.param)
            if s.kind == "linear":
                return check_preciseness_closure(ext, m, step=self.step_transducer())
        elif s.kind == "linear":
            return check_preciseness_reach(self.step_transducer(), ext, m)
        return CheckReport(f"preciseness-{self.cfg.mode}",
                           Inconclusive(Reason.EXTENDED_LANGUAGE_GAP, f"no fixed step between {s} samples"), {}, m)

    def fixpoint(self, it: Iteration) -> Outcome | None:
        """A sample closed under one more step is already the exact answer."""
        cand = self.samples[-1]
        if len(self.samples) > 1 and cand != self.samples[-2]:
            return None
        rep = self.safety(cand)
        it.attempts.append(Attempt((len(self.samples) - 1, len(self.samples)), "", cand.n, [rep], "fixpoint"))
        if rep.holds:
            return ExactClosure(cand)
        return None

    def try_window(self, lo: int, it: Iteration) -> Outcome | None:
        try:
            return self._try_window(lo, it)
        except StateLimitExceeded as exc:
            # a blown-up candidate says nothing about later windows
            log.info("window %d: %s", lo, exc)
            it.attempts[-1].note = f"gave up checking: {exc}"
            return None

    def _try_window(self, lo: int, it: Iteration) -> Outcome | None:
        window = self.samples[lo:]
        try:
            grow = decompose_pair_aware(window)
        except NotGrowing as exc:
            log.debug("window %d..%d: %s", lo, len(self.samples) - 1, exc)
            return None
        att = Attempt((lo, len(self.samples)), grow.dump(), None, [])
        it.attempts.append(att)
        log.debug("window %d..%d: %d increments", lo, len(self.samples) - 1, grow.k)
        if grow.k < 2:
            att.note = "fewer than two increments"
            return None
        if not communication_stable(previous_decomposition(window), grow):
            att.note = "heads not communication stable"
            return None
        if not communication_equivalent(grow, 0, 1):
            att.note = "I0 and I1 not communication equivalent"
            if self.cfg.strict_equivalence:
                return None
        ext = extrapolate(grow.automaton, grow)
        try:
            cand = ext.minimized
        except NotWeakResult as exc:
            att.note = "extrapolation not inherently weak"
            att.reports.append(CheckReport("determinize-extrapolation",
                                           Inconclusive(Reason.NOT_INHERENTLY_WEAK, str(exc)), {}))
            return None
        att.result_states = cand.n
        self.note(cand.n)
        self.budget()
        safe = self.safety(cand)
        att.reports.append(safe)
        if not safe.holds:
            att.note = "safety"
            return None
        if self.safe is None:
            self.safe = (cand, ext)
        mult = self.cfg.sync_mult
        prec = self.preciseness(ext, mult)
        att.reports.append(prec)
        if isinstance(prec.verdict, Inconclusive) and prec.verdict.reason is not Reason.NOT_INHERENTLY_WEAK:
            log.info("preciseness inconclusive at M=%s, doubling the bound once", prec.sync_bound)
            self.budget()
            prec = self.preciseness(ext, 2 * mult)
            att.reports.append(prec)
        if isinstance(prec.verdict, CriterionHolds):
            self.safe = (cand, ext)
            return ExactClosure(cand)
        att.note = "preciseness"
        return None

    def _loop(self) -> EngineResult:
        cfg = self.cfg
        outcome: Outcome | None = None
        ext_used: Extrapolation | None = None
        try:
            for idx, e in enumerate(cfg.sampling):
                if idx >= cfg.max_samples:
                    raise _Budget(f"sample cap {cfg.max_samples} reached")
                self.budget()
                aut = self.sample(e)
                self.samples.append(aut)
                self.exponents.append(e)
                it = Iteration(idx, e, aut.n)
                self.trace.append(it)
                log.info("sample %d (exponent %d): %d states", idx, e, aut.n)
                if cfg.on_sample is not None and cfg.on_sample(e, aut) is False:
                    raise _Budget("stopped by the sample hook")
                outcome = self.fixpoint(it)
                if outcome is not None:
                    break
                n = len(self.samples)
                for lo in range(0, n - cfg.min_window + 1):
                    self.budget()
                    outcome = self.try_window(lo, it)
                    if outcome is not None:
                        ext_used = self.safe[1] if self.safe else None
                        break
                if outcome is not None:
                    break
            else:
                raise _Budget("sampling sequence exhausted")
        except _Budget as exc:
            log.info("stopping: %s", exc)
            if self.safe is not None:
                outcome = SafeOverApproximation(self.safe[0])
                ext_used = self.safe[1]
            else:
                outcome = GaveUp(str(exc))
        except RmcError as exc:  # pragma: no cover - defensive: report, never crash
            log.error("engine error: %s", exc)
            outcome = GaveUp(f"{type(exc).__name__}: {exc}")
        return EngineResult(outcome, self.trace, self.peak, self.elapsed(), ext_used, max(self.peak_any, self.peak))

    def run(self) -> EngineResult:
        with state_budget(self.cfg.construction_limit):
            return self._loop()


def run(t: Transducer, a: Automaton | None = None, cfg: RunConfig | None = None) -> EngineResult:
    """Compute the closure of ``t`` (or the states reachable from ``a``)."""
    cfg = cfg or RunConfig(mode="reach" if a is not None else "closure")
    if (a is not None) != (cfg.mode == "reach"):
        raise ValueError("an initial automaton is needed exactly in reach mode")
    if a is not None and (a.alphabet != t.base or a.kind is not t.kind):
        raise ValueError("initial automaton does not match the transducer's alphabet or kind")
    return _Run(t, a, cfg).run()
