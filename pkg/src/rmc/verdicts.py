"""Outcomes of the sufficient criteria: holds, fails with a witness, or can't tell."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union


class Reason(enum.Enum):
    NOT_INHERENTLY_WEAK = "NotInherentlyWeak"
    EXTENDED_LANGUAGE_GAP = "ExtendedLanguageGap"
    SYNCHRONIZATION_LOSS = "SynchronizationLoss"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CriterionHolds:
    def __str__(self) -> str:
        return "CriterionHolds"


@dataclass(frozen=True)
class CriterionFails:
    # a finite word (tuple of labels) or a Lasso
    witness: object

    def __str__(self) -> str:
        return "CriterionFails"


@dataclass(frozen=True)
class Inconclusive:
    reason: Reason
    detail: str = ""

    def __str__(self) -> str:
        return f"Inconclusive({self.reason})"


Verdict = Union[CriterionHolds, CriterionFails, Inconclusive]


def holds(v: Verdict) -> bool:
    return isinstance(v, CriterionHolds)
