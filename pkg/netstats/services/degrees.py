"""
Degree statistics of a threshold view.
"""
import logging
from typing import List, Optional, Tuple

from scipy import stats

from netstats.models import DegreeSequence, FrequencyDegreeRow
from simjoin.models import ThresholdView

logger = logging.getLogger(__name__)


def degree_sequence(view: ThresholdView) -> DegreeSequence:
    return DegreeSequence(tuple(len(neighbors) for neighbors in view.adjacency))


def degree_rank(view: ThresholdView) -> List[Tuple[int, int]]:
    """(rank, degree) with degrees descending; equal degrees keep node-id order."""
    degrees = degree_sequence(view).degrees
    order = sorted(range(len(degrees)), key=lambda v: (-degrees[v], v))
    return [(rank, degrees[v]) for rank, v in enumerate(order, start=1)]


def frequency_degree_table(view: ThresholdView) -> List[FrequencyDegreeRow]:
    """
    Nodes in descending frequency (node ids already follow that order) with their degree,
    to compare the frequency curve with the degree of the same passwords.
    """
    degrees = degree_sequence(view).degrees
    return [
        FrequencyDegreeRow(rank=v + 1, node=v, frequency=frequency, degree=degrees[v])
        for v, frequency in enumerate(view.frequencies)
    ]


def frequency_degree_correlation(view: ThresholdView) -> Optional[float]:
    """Spearman correlation of frequency and degree; None when either side is constant."""
    degrees = degree_sequence(view).degrees
    frequencies = view.frequencies
    if len(degrees) < 2 or len(set(degrees)) < 2 or len(set(frequencies)) < 2:
        logger.info("[frequency_degree_correlation] constant input, correlation undefined")
        return None
    rho, _ = stats.spearmanr(frequencies, degrees)
    return float(rho)
