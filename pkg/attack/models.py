"""
Attack model values.

A Dictionary is a guess order over node ids. Guessing p is taken to compromise every
account whose password lies in the closed neighborhood N[p] of the threshold view;
G_max of a dictionary prefix is the account weight of the union of those neighborhoods.
"""
from dataclasses import dataclass
from typing import Tuple

from attack import config


@dataclass(frozen=True)
class Dictionary:
    ordering: Tuple[int, ...]
    label: str = "custom"

    def __post_init__(self):
        if self.label not in config.DICTIONARY_LABELS:
            raise ValueError(f"unknown dictionary label '{self.label}'")
        if len(set(self.ordering)) != len(self.ordering):
            raise ValueError("dictionary entries must be distinct node ids")

    def __len__(self) -> int:
        return len(self.ordering)

    def __iter__(self):
        return iter(self.ordering)

    def prefix(self, size: int) -> Tuple[int, ...]:
        return self.ordering[:size]


@dataclass(frozen=True)
class CurvePoint:
    size: int
    gmax: int
    ratio: float


@dataclass(frozen=True)
class CrackingCurve:
    points: Tuple[CurvePoint, ...]
    label: str
    total_accounts: int

    def __len__(self) -> int:
        return len(self.points)

    @property
    def final_gmax(self) -> int:
        return self.points[-1].gmax if self.points else 0


@dataclass(frozen=True)
class ClosureRound:
    round: int
    covered_nodes: int
    covered_accounts: int
