"""
Dictionary orderings. Every key ends in the canonical tiebreak (higher frequency, then
byte-lexicographic password), so each ordering is a total order.
"""
from typing import Sequence

from attack.models import Dictionary
from corpus.models import Corpus
from general.errors import ArgumentError
from simjoin.models import ThresholdView


def check_aligned(view: ThresholdView, corpus: Corpus):
    if corpus.unique_count != view.node_count:
        raise ArgumentError(
            f"corpus has {corpus.unique_count} records but the graph has {view.node_count} nodes"
        )


def _ranked(view: ThresholdView, primary: Sequence[int], label: str) -> Dictionary:
    frequencies, passwords = view.frequencies, view.passwords
    order = sorted(range(view.node_count), key=lambda v: (-primary[v], -frequencies[v], passwords[v]))
    return Dictionary(tuple(order), label)


def rank_by_frequency(corpus: Corpus) -> Dictionary:
    # node ids are positions in canonical order already
    return Dictionary(tuple(range(corpus.unique_count)), "frequency")


def rank_by_degree(view: ThresholdView) -> Dictionary:
    """Static degree on the view, computed once."""
    return _ranked(view, [len(neighbors) for neighbors in view.adjacency], "degree")


def rank_by_neighborhood_weight(view: ThresholdView, corpus: Corpus) -> Dictionary:
    """Descending account weight of the closed neighborhood, f(v) + sum of f(u) over neighbors."""
    check_aligned(view, corpus)
    frequencies = corpus.frequencies
    weights = [
        frequencies[v] + sum(frequencies[u] for u in neighbors)
        for v, neighbors in enumerate(view.adjacency)
    ]
    return _ranked(view, weights, "neighborhood_weight")
