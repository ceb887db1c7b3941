import math
import random

from mindict.services.dominating import (
    arnautov_bound,
    exact_dominating_set,
    greedy_dominating_set,
    is_dominating,
)
from netstats.services.degrees import degree_sequence
from simjoin.services.views import threshold_view
from testing.acceptance.base import check
from testing.synthetic.generators import connected_random_graph, min_degree_graph


def run():
    print("Running: scenario_dominating_set")
    rng = random.Random(7)
    for seed in range(200):
        n = rng.randint(1, 10)
        view = threshold_view(connected_random_graph(seed, n, rng.uniform(0.0, 0.5)), 1)
        exact = exact_dominating_set(view)
        greedy = greedy_dominating_set(view)
        delta = degree_sequence(view).max_degree
        check(is_dominating(view, exact.nodes) and is_dominating(view, greedy.nodes), f"not dominating (seed={seed})")
        check(exact.size <= greedy.size, f"exact larger than greedy (seed={seed})")
        check(
            greedy.size <= exact.size * (math.log(delta + 1) + 1),
            f"greedy above the ln(delta+1)+1 guarantee (seed={seed})",
        )
    for k in (1, 2, 3):
        for seed in range(20):
            n = 50 + 10 * seed
            view = threshold_view(min_degree_graph(seed, n, k), 1)
            greedy = greedy_dominating_set(view)
            check(greedy.size <= arnautov_bound(n, k) + 1e-9, f"greedy above the min-degree bound (n={n}, k={k})")
    print("✓ Passed")
