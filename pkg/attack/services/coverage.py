"""
Coverage model: closed neighborhoods, G_max, cracking curves, closure rounds.
"""
import logging
from typing import FrozenSet, Iterable, List, Optional, Sequence

import networkx as nx

from attack.models import ClosureRound, CrackingCurve, CurvePoint, Dictionary
from attack.services.ranking import check_aligned
from corpus.models import Corpus
from general.errors import ArgumentError
from simjoin.models import ThresholdView

logger = logging.getLogger(__name__)


def _validated(view: ThresholdView, nodes: Iterable[int]) -> FrozenSet[int]:
    nodes = frozenset(nodes)
    for v in nodes:
        if not 0 <= v < view.node_count:
            raise ArgumentError(f"unknown node id {v} (graph has {view.node_count} nodes)")
    return nodes


def closed_neighborhood(view: ThresholdView, nodes: Iterable[int]) -> FrozenSet[int]:
    """Union of N[v] = {v} + neighbors(v) over nodes."""
    nodes = _validated(view, nodes)
    covered = set(nodes)
    for v in nodes:
        covered.update(view.adjacency[v])
    return frozenset(covered)


def cumulative_frequency(corpus: Corpus, dictionary: Dictionary, size: int) -> int:
    """Accounts hit by the first `size` guesses alone, without neighbors."""
    if not 0 <= size <= len(dictionary):
        raise ArgumentError(f"size must be within 0..{len(dictionary)}, got {size}")
    frequencies = corpus.frequencies
    return sum(frequencies[v] for v in dictionary.prefix(size))


def max_successful_guesses(view: ThresholdView, corpus: Corpus, dictionary: Dictionary, size: int) -> int:
    check_aligned(view, corpus)
    if not 1 <= size <= len(dictionary):
        raise ArgumentError(f"size must be within 1..{len(dictionary)}, got {size}")
    frequencies = corpus.frequencies
    return sum(frequencies[v] for v in closed_neighborhood(view, dictionary.prefix(size)))


def cracking_curve(
    view: ThresholdView,
    corpus: Corpus,
    dictionary: Dictionary,
    sizes: Optional[Sequence[int]] = None,
) -> CrackingCurve:
    """
    G_max at every dictionary size (or at `sizes`, strictly increasing within 1..len).
    One pass over the dictionary with a coverage bitmap.
    """
    check_aligned(view, corpus)
    n_entries = len(dictionary)
    if sizes is None:
        sizes = range(1, n_entries + 1)
    else:
        sizes = list(sizes)
        if any(b <= a for a, b in zip(sizes, sizes[1:])):
            raise ArgumentError("curve sizes must be strictly increasing")
        if sizes and not (1 <= sizes[0] and sizes[-1] <= n_entries):
            raise ArgumentError(f"curve sizes must lie within 1..{n_entries}")
    _validated(view, dictionary.ordering)

    total = corpus.total_accounts
    frequencies = corpus.frequencies
    covered = bytearray(view.node_count)
    gmax = 0
    points: List[CurvePoint] = []
    wanted = iter(sizes)
    next_size = next(wanted, None)
    for position, v in enumerate(dictionary.ordering, start=1):
        if next_size is None:
            break
        for u in (v, *view.adjacency[v]):
            if not covered[u]:
                covered[u] = 1
                gmax += frequencies[u]
        if position == next_size:
            points.append(CurvePoint(size=position, gmax=gmax, ratio=gmax / total))
            next_size = next(wanted, None)
    logger.debug(f"[cracking_curve] {dictionary.label}: {len(points)} points, final gmax {gmax}")
    return CrackingCurve(points=tuple(points), label=dictionary.label, total_accounts=total)


def closure_expand(view: ThresholdView, seeds: Iterable[int]) -> FrozenSet[int]:
    """Fixpoint of repeated closed-neighborhood expansion: the components touching seeds."""
    seeds = _validated(view, seeds)
    graph = view.to_networkx()
    reached = set()
    for v in sorted(seeds):
        if v not in reached:
            reached |= nx.node_connected_component(graph, v)
    return frozenset(reached)


def closure_rounds(view: ThresholdView, corpus: Corpus, seeds: Iterable[int]) -> List[ClosureRound]:
    """
    Coverage after each attack round: round 0 is the seeds, round k adds the neighbors of
    everything compromised in round k-1. Ends at the first round that adds nothing new.
    """
    check_aligned(view, corpus)
    frequencies = corpus.frequencies
    reached = set(_validated(view, seeds))
    frontier = set(reached)
    accounts = sum(frequencies[v] for v in reached)
    rounds = [ClosureRound(0, len(reached), accounts)]
    while frontier:
        fresh = {u for v in frontier for u in view.adjacency[v]} - reached
        if not fresh:
            break
        reached |= fresh
        accounts += sum(frequencies[u] for u in fresh)
        rounds.append(ClosureRound(len(rounds), len(reached), accounts))
        frontier = fresh
    return rounds
