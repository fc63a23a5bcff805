"""Regular model checking: closures and reachable sets of regular relations by extrapolating sampled powers."""

from .automata import Alphabet, Automaton, Kind
from .builders import affine_relation, initial_token_ring, token_ring
from .counters import CounterAutomaton
from .engine import EngineResult, ExactClosure, GaveUp, RunConfig, SafeOverApproximation, run
from .textio import emit_text, parse_model, parse_text
from .transducer import SamplingStrategy, Transducer

__all__ = [
    "Alphabet",
    "Automaton",
    "CounterAutomaton",
    "EngineResult",
    "ExactClosure",
    "GaveUp",
    "Kind",
    "RunConfig",
    "SafeOverApproximation",
    "SamplingStrategy",
    "Transducer",
    "affine_relation",
    "emit_text",
    "initial_token_ring",
    "parse_model",
    "parse_text",
    "run",
    "token_ring",
]
