from netstats.services.communities import detect_communities, modularity
from simjoin.services.views import threshold_view
from testing.acceptance.base import check
from testing.synthetic.generators import two_cliques_with_bridge


def _partitions(n):
    def extend(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for label in range(top + 2):
            yield from extend(prefix + [label], max(top, label))
    yield from extend([0], 0)


def run():
    print("Running: scenario_communities")
    view = threshold_view(two_cliques_with_bridge(4), 1)
    best = max(_partitions(8), key=lambda labels: modularity(view, labels))
    first = detect_communities(view, seed=0)
    check(first.community_count == 2, f"expected 2 communities, got {first.community_count}")
    check(first.labels == best, f"labels {first.labels} differ from the modularity optimum {best}")
    for seed in (0, 1, 2, 3):
        check(
            detect_communities(view, seed=seed).labels == detect_communities(view, seed=seed).labels,
            f"seed {seed} not reproducible",
        )
    print("✓ Passed")
