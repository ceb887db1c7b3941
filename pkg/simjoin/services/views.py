from general.errors import ArgumentError
from simjoin.models import PasswordGraph, ThresholdView


def threshold_view(graph: PasswordGraph, t: int) -> ThresholdView:
    """Edges with distance <= t. A threshold above the build threshold needs a rebuild."""
    if t < 0:
        raise ArgumentError(f"threshold_view requires t >= 0, got {t}")
    if t > graph.t_build:
        raise ArgumentError(f"graph was built with t={graph.t_build}; t={t} requires a rebuild")
    return ThresholdView(graph, t)
