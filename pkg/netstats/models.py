"""
Network statistics values.
"""
from dataclasses import dataclass
from typing import Optional, Tuple


@dataclass(frozen=True)
class DegreeSequence:
    """degrees[v] = number of neighbors of node v in the view it was taken from."""

    degrees: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.degrees)

    def __getitem__(self, node: int) -> int:
        return self.degrees[node]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def positive(self) -> Tuple[int, ...]:
        """Degrees of the non-isolated nodes, the sample a power-law fit runs on."""
        return tuple(d for d in self.degrees if d > 0)


@dataclass(frozen=True)
class PowerLawFit:
    exponent: float
    x_min: int
    sample_count: int
    log_likelihood: float


@dataclass(frozen=True)
class FrequencyDegreeRow:
    rank: int
    node: int
    frequency: int
    degree: int


@dataclass(frozen=True)
class CommunityAssignment:
    """
    labels[v] is the community of node v. Ids are dense, numbered in order of the
    smallest node they contain.
    """

    labels: Tuple[int, ...]
    community_count: int
    modularity: float
    strategy: str = "label_propagation"
    seed: Optional[int] = None

    def members(self, community: int) -> Tuple[int, ...]:
        return tuple(v for v, label in enumerate(self.labels) if label == community)
