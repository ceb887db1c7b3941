from simjoin.services.join import build_graph
from testing.acceptance.base import check, time_limit
from testing.synthetic.generators import random_corpus


def run():
    print("Running: scenario_join_oracle")
    with time_limit("50 corpora x 3 thresholds", 60):
        for seed in range(50):
            corpus = random_corpus(seed, 500, min_len=1, max_len=16)
            for t in (1, 2, 3):
                naive = build_graph(corpus, t, "naive").edges
                bucketed = build_graph(corpus, t, "bucketed").edges
                check(bucketed == naive, f"bucketed join differs from naive join (seed={seed}, t={t})")
    print("✓ Passed")
