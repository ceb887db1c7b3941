import random

from attack.services.coverage import cracking_curve, max_successful_guesses
from attack.services.ranking import rank_by_degree, rank_by_frequency, rank_by_neighborhood_weight
from simjoin.services.join import corpus_from_graph
from simjoin.services.views import threshold_view
from testing.acceptance.base import check
from testing.synthetic.generators import random_graph


def run():
    print("Running: scenario_coverage_model")
    rng = random.Random(2024)
    for seed in range(100):
        n = rng.randint(1, 200)
        graph = random_graph(seed, n, rng.uniform(0.0, 0.05))
        view, corpus = threshold_view(graph, 1), corpus_from_graph(graph)
        shuffled = list(range(n))
        rng.shuffle(shuffled)
        orderings = [rank_by_frequency(corpus), rank_by_degree(view), rank_by_neighborhood_weight(view, corpus)]
        for dictionary in orderings:
            gmax = [p.gmax for p in cracking_curve(view, corpus, dictionary).points]
            naive = [max_successful_guesses(view, corpus, dictionary, size) for size in range(1, n + 1)]
            check(gmax == naive, f"incremental curve differs from recomputation (seed={seed}, {dictionary.label})")
            check(gmax == sorted(gmax), f"curve not monotone (seed={seed})")
            check(gmax[-1] == corpus.total_accounts, f"full dictionary misses accounts (seed={seed})")
    print("✓ Passed")
