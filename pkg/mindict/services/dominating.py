"""
Dominating sets of a threshold view.

A set D dominates the graph when the closed neighborhoods of its members cover every
node; a dictionary of D's passwords then reaches every account. Finding the smallest
one is NP-hard, so:

- greedy_dominating_set: pick the node covering the most uncovered nodes, until done.
- exact_dominating_set: branch and bound, for graphs within the node budget.
- partial_dominating_dictionary: greedy on newly covered account weight, stopping at a
  target share of the accounts.

Greedy ties go to the higher frequency, then the lexicographically smaller password.
"""
import heapq
import logging
import math
from typing import List

from django.conf import settings

from attack.models import Dictionary
from attack.services.coverage import closed_neighborhood
from attack.services.ranking import check_aligned
from corpus.models import Corpus
from general.errors import ArgumentError, ResourceGuardError
from mindict import config
from mindict.models import DictionaryCoverage, DominatingSetResult
from simjoin.models import ThresholdView

logger = logging.getLogger(__name__)


class ExactBudgetError(ResourceGuardError):
    pass


def arnautov_bound(n: int, min_degree: int) -> float:
    """Every n-node graph with minimum degree k has a dominating set of at most n(1 + ln(k+1))/(k+1) nodes."""
    if n < 1 or min_degree < 0:
        raise ArgumentError(f"need n >= 1 and min_degree >= 0, got n={n}, min_degree={min_degree}")
    k = min_degree
    return n * (1 + math.log(k + 1)) / (k + 1)


def _bound_for(view: ThresholdView) -> float:
    return arnautov_bound(view.node_count, min(len(neighbors) for neighbors in view.adjacency))


def _closed(view: ThresholdView, v: int):
    return (v, *view.adjacency[v])


def _lazy_greedy(view: ThresholdView, weights: List[int], stop_at: int) -> List[int]:
    """
    Greedy cover by weight of newly covered nodes until the covered weight reaches stop_at.
    Gains only shrink, so a popped entry whose recomputed gain still matches is the best pick.
    """
    frequencies, passwords = view.frequencies, view.passwords
    covered = bytearray(view.node_count)
    covered_weight = 0
    picks: List[int] = []
    heap = [
        (-sum(weights[u] for u in _closed(view, v)), -frequencies[v], passwords[v], v)
        for v in range(view.node_count)
    ]
    heapq.heapify(heap)
    while covered_weight < stop_at and heap:
        stale_gain, neg_frequency, password, v = heapq.heappop(heap)
        gain = sum(weights[u] for u in _closed(view, v) if not covered[u])
        if gain == 0:
            continue
        if gain != -stale_gain:
            heapq.heappush(heap, (-gain, neg_frequency, password, v))
            continue
        picks.append(v)
        for u in _closed(view, v):
            if not covered[u]:
                covered[u] = 1
                covered_weight += weights[u]
    return picks


def _result(view: ThresholdView, nodes, method: str) -> DominatingSetResult:
    reached = closed_neighborhood(view, nodes)
    result = DominatingSetResult(
        nodes=tuple(nodes),
        method=method,
        covered_accounts=sum(view.frequencies[v] for v in reached),
        is_dominating=len(reached) == view.node_count,
        arnautov_bound=_bound_for(view),
    )
    if not result.is_dominating:
        logger.error(f"[{method}_dominating_set] result misses {view.node_count - len(reached)} nodes")
    return result


def greedy_dominating_set(view: ThresholdView) -> DominatingSetResult:
    picks = _lazy_greedy(view, [1] * view.node_count, view.node_count)
    logger.info(f"[greedy_dominating_set] {len(picks)} of {view.node_count} nodes")
    return _result(view, picks, "greedy")


def exact_dominating_set(view: ThresholdView, node_budget: int = None) -> DominatingSetResult:
    """Minimum dominating set. Branches on the neighbors of the lowest undominated node."""
    if node_budget is None:
        node_budget = getattr(settings, "PWNET_EXACT_NODE_BUDGET", config.EXACT_NODE_BUDGET)
    n = view.node_count
    if n > node_budget:
        raise ExactBudgetError(
            f"exact search over {n} nodes exceeds the node budget {node_budget}",
            requested=n,
            budget=node_budget,
        )
    masks = [sum(1 << u for u in _closed(view, v)) for v in range(n)]
    largest = max(bin(mask).count("1") for mask in masks)
    full = (1 << n) - 1
    best = sorted(greedy_dominating_set(view).nodes)
    chosen: List[int] = []

    def search(covered: int):
        nonlocal best
        if covered == full:
            if len(chosen) < len(best):
                best = sorted(chosen)
            return
        remaining = bin(full & ~covered).count("1")
        if len(chosen) + math.ceil(remaining / largest) >= len(best):
            return
        lowest = (~covered & (covered + 1)).bit_length() - 1
        candidates = sorted(_closed(view, lowest), key=lambda w: -bin(masks[w] & ~covered).count("1"))
        for w in candidates:
            chosen.append(w)
            search(covered | masks[w])
            chosen.pop()

    search(0)
    logger.info(f"[exact_dominating_set] gamma={len(best)} over {n} nodes")
    return _result(view, best, "exact")


def partial_dominating_dictionary(view: ThresholdView, corpus: Corpus, target_ratio: float) -> Dictionary:
    """Greedy picks by newly covered accounts until covered / total >= target_ratio."""
    if not 0 <= target_ratio <= 1:
        raise ArgumentError(f"target_ratio must be within [0, 1], got {target_ratio}")
    check_aligned(view, corpus)
    total = corpus.total_accounts
    # smallest integer account count whose share reaches the target
    stop_at = min(total, math.ceil(target_ratio * total - 1e-9))
    picks = _lazy_greedy(view, list(corpus.frequencies), stop_at)
    logger.info(f"[partial_dominating_dictionary] {len(picks)} guesses for ratio {target_ratio}")
    return Dictionary(tuple(picks), "custom")


def dictionary_coverage(view: ThresholdView, corpus: Corpus, dictionary: Dictionary) -> DictionaryCoverage:
    check_aligned(view, corpus)
    reached = closed_neighborhood(view, dictionary.ordering)
    accounts = sum(corpus.frequencies[v] for v in reached)
    return DictionaryCoverage(nodes=reached, covered_accounts=accounts, ratio=accounts / corpus.total_accounts)


def is_dominating(view: ThresholdView, nodes) -> bool:
    return len(closed_neighborhood(view, nodes)) == view.node_count

