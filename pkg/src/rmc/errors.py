"""Exception types shared across the package."""

from __future__ import annotations


class RmcError(Exception):
    """Base class for every error raised by this package."""


class AlphabetMismatch(RmcError):
    pass


class BadTrackIndex(RmcError):
    pass


class BadCounterIndex(RmcError):
    pass


class DimensionMismatch(RmcError):
    pass


class MalformedExtendedSymbol(RmcError):
    pass


class NotDeterministic(RmcError):
    pass


class NotWeak(RmcError):
    pass


class NotCanonical(RmcError):
    """An operation that needs a canonical minimal automaton got something else."""


class NotWeakResult(RmcError):
    """A weak-mode operation produced an automaton that is not inherently weak.

    The offending deterministic (co-Buchi flagged) automaton is kept on
    ``automaton`` so callers can still inspect it.
    """

    def __init__(self, automaton, message: str = "result is not inherently weak"):
        super().__init__(message)
        self.automaton = automaton


class NotGrowing(RmcError):
    def __init__(self, step: int, message: str = ""):
        super().__init__(f"sequence stops growing at step {step}" + (f": {message}" if message else ""))
        self.step = step


class TooFewIncrements(RmcError):
    pass


class ParseError(RmcError, ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class StateLimitExceeded(RmcError):
    """A construction grew past the state budget set with ``state_budget``."""

    def __init__(self, limit: int):
        super().__init__(f"construction exceeded {limit} states")
        self.limit = limit
