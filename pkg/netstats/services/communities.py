"""
Community detection on a threshold view.

label_propagation (default)
  Every node starts with its own label, the labels permuted by the seed. Each round all
  nodes adopt, at once, the most frequent label in their closed neighborhood; ties go to
  the lowest label. Stops when nothing changes or at the iteration cap. Labels only
  travel along edges, so communities never span two components.

greedy_modularity
  networkx Clauset-Newman-Moore agglomeration. Ignores the seed.
"""
import logging
import random
from collections import Counter, defaultdict
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from general.errors import ArgumentError
from netstats import config
from netstats.models import CommunityAssignment
from simjoin.models import ThresholdView

logger = logging.getLogger(__name__)


def _dense_labels(labels: Sequence[int]) -> Tuple[int, ...]:
    mapping: Dict[int, int] = {}
    for label in labels:
        mapping.setdefault(label, len(mapping))
    return tuple(mapping[label] for label in labels)


def _label_propagation(view: ThresholdView, seed: int, max_iterations: int) -> Tuple[int, ...]:
    n = view.node_count
    labels = list(range(n))
    random.Random(seed).shuffle(labels)
    for iteration in range(1, max_iterations + 1):
        updated = []
        for v in range(n):
            counts = Counter(labels[u] for u in view.adjacency[v])
            counts[labels[v]] += 1
            best = max(counts.values())
            updated.append(min(label for label, count in counts.items() if count == best))
        if updated == labels:
            logger.debug(f"[label_propagation] converged after {iteration} rounds")
            break
        labels = updated
    else:
        logger.warning(f"[label_propagation] stopped at the iteration cap ({max_iterations})")
    return _dense_labels(labels)


def _greedy_modularity(view: ThresholdView) -> Tuple[int, ...]:
    if view.edge_count == 0:
        return tuple(range(view.node_count))
    groups = nx.community.greedy_modularity_communities(view.to_networkx(), weight=None)
    raw = [0] * view.node_count
    for label, group in enumerate(groups):
        for v in group:
            raw[v] = label
    return _dense_labels(raw)


def modularity(view: ThresholdView, labels: Sequence[int]) -> float:
    """Newman modularity of the partition given by labels; 0 for an edgeless view."""
    if len(labels) != view.node_count or any(label is None or label < 0 for label in labels):
        raise ArgumentError(f"labels must assign a community to each of the {view.node_count} nodes")
    if view.edge_count == 0:
        return 0.0
    groups: Dict[int, List[int]] = defaultdict(list)
    for v, label in enumerate(labels):
        groups[label].append(v)
    return float(nx.community.modularity(view.to_networkx(), list(groups.values()), weight=None))


def detect_communities(
    view: ThresholdView,
    seed: int = config.DEFAULT_SEED,
    strategy: str = config.DEFAULT_COMMUNITY_STRATEGY,
    max_iterations: int = config.LABEL_PROPAGATION_MAX_ITERATIONS,
) -> CommunityAssignment:
    if strategy == "label_propagation":
        labels = _label_propagation(view, seed, max_iterations)
    elif strategy == "greedy_modularity":
        labels = _greedy_modularity(view)
    else:
        raise ArgumentError(
            f"Unknown community strategy '{strategy}'. Available: {', '.join(config.COMMUNITY_STRATEGIES)}"
        )
    assignment = CommunityAssignment(
        labels=labels,
        community_count=max(labels, default=-1) + 1,
        modularity=modularity(view, labels),
        strategy=strategy,
        seed=seed if strategy == "label_propagation" else None,
    )
    logger.info(
        f"[detect_communities] {strategy}: {assignment.community_count} communities, "
        f"Q={assignment.modularity:.4f}"
    )
    return assignment


def community_sizes(assignment: CommunityAssignment) -> Tuple[int, ...]:
    """Size of each community, indexed by community id."""
    sizes = Counter(assignment.labels)
    return tuple(sizes[c] for c in range(assignment.community_count))


def filter_small_communities(
    assignment: CommunityAssignment,
    min_fraction: float = config.DEFAULT_MIN_COMMUNITY_FRACTION,
) -> Tuple[int, ...]:
    """Node ids whose community holds at least min_fraction of all nodes."""
    if not 0 <= min_fraction <= 1:
        raise ArgumentError(f"min_fraction must be within [0, 1], got {min_fraction}")
    sizes = community_sizes(assignment)
    floor = min_fraction * len(assignment.labels)
    return tuple(v for v, label in enumerate(assignment.labels) if sizes[label] >= floor)
