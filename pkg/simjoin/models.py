"""
Password graph values.

PasswordGraph
  nodes   = unique passwords, ids 0..n-1 in corpus canonical order
  edges   = pairs at edit distance 1..t_build, stored once as (i, j, d) with i < j
  adjacency lists carry (neighbor, d), sorted by neighbor id

Edges keep their exact distance, so one build at t_build serves every smaller threshold
through a ThresholdView. Adjacency lists only; no n x n matrix.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

import networkx as nx

Edge = Tuple[int, int, int]


@dataclass(frozen=True)
class PasswordGraph:
    node_passwords: Tuple[bytes, ...]
    node_frequencies: Tuple[int, ...]
    edges: Tuple[Edge, ...]
    t_build: int
    strategy: str = "naive"
    comparisons: int = 0

    @property
    def node_count(self) -> int:
        return len(self.node_passwords)

    @cached_property
    def adjacency(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        lists = [[] for _ in range(self.node_count)]
        for i, j, d in self.edges:
            lists[i].append((j, d))
            lists[j].append((i, d))
        return tuple(tuple(sorted(neighbors)) for neighbors in lists)

    @property
    def total_accounts(self) -> int:
        return sum(self.node_frequencies)


@dataclass(frozen=True)
class ThresholdView:
    """The edges of `base` with distance <= t_view. Node set is always the full graph."""

    base: PasswordGraph
    t_view: int

    @property
    def node_count(self) -> int:
        return self.base.node_count

    @property
    def passwords(self) -> Tuple[bytes, ...]:
        return self.base.node_passwords

    @property
    def frequencies(self) -> Tuple[int, ...]:
        return self.base.node_frequencies

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        t = self.t_view
        return tuple(
            tuple(neighbor for neighbor, d in neighbors if d <= t)
            for neighbors in self.base.adjacency
        )

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(edge for edge in self.base.edges if edge[2] <= self.t_view)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, node: int) -> Tuple[int, ...]:
        return self.adjacency[node]

    def degree(self, node: int) -> int:
        return len(self.adjacency[node])

    def without_isolated(self) -> Tuple[int, ...]:
        """Node ids with at least one edge in this view."""
        return tuple(v for v, neighbors in enumerate(self.adjacency) if neighbors)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.node_count))
        graph.add_weighted_edges_from(self.edges, weight="distance")
        return graph
