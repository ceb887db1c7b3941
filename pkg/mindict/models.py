from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

from attack.models import Dictionary


@dataclass(frozen=True)
class DominatingSetResult:
    """
    nodes keeps the pick order for greedy results and ascending ids for exact ones.
    is_dominating is checked against the closed neighborhoods before a result is returned.
    """

    nodes: Tuple[int, ...]
    method: str
    covered_accounts: int
    is_dominating: bool
    arnautov_bound: Optional[float] = None

    @property
    def size(self) -> int:
        return len(self.nodes)

    def to_dictionary(self) -> Dictionary:
        return Dictionary(self.nodes, "custom")


@dataclass(frozen=True)
class DictionaryCoverage:
    nodes: FrozenSet[int]
    covered_accounts: int
    ratio: float
