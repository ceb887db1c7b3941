import random
from unittest import TestCase

from general.errors import ArgumentError
from netstats.services.communities import (
    community_sizes,
    detect_communities,
    filter_small_communities,
    modularity,
)
from netstats.services.components import component_count, connected_components
from netstats.services.degrees import (
    degree_rank,
    degree_sequence,
    frequency_degree_correlation,
    frequency_degree_table,
)
from netstats.services.powerlaw import (
    DegenerateFitError,
    InsufficientDataError,
    fit_power_law,
    sample_discrete_power_law,
)
from simjoin.services.join import graph_from_edges
from simjoin.services.views import threshold_view
from testing.synthetic.generators import (
    clique_edges,
    labelled_graph,
    numbered_corpus,
    random_graph,
    two_cliques_with_bridge,
)


def path_with_isolated():
    """a(4)-b(3)-c(2) plus isolated d(1); ids 0..3 in that order."""
    graph = labelled_graph({b"a": 4, b"b": 3, b"c": 2, b"d": 1}, [(b"a", b"b"), (b"b", b"c")])
    return threshold_view(graph, 1)


def set_partitions(n):
    """All partitions of 0..n-1 as label tuples (restricted growth strings)."""
    def extend(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for label in range(top + 2):
            yield from extend(prefix + [label], max(top, label))
    yield from extend([0], 0)


class DegreeTests(TestCase):
    def test_path(self):
        view = path_with_isolated()
        self.assertEqual(degree_sequence(view).degrees, (1, 2, 1, 0))

    def test_edgeless_view(self):
        view = threshold_view(random_graph(1, 20, 0.3), 0)
        self.assertEqual(set(degree_sequence(view).degrees), {0})
        self.assertEqual([degree for _, degree in degree_rank(view)], [0] * 20)

    def test_handshake(self):
        for seed in range(5):
            view = threshold_view(random_graph(seed, 60, 0.1, max_distance=3), 2)
            degrees = degree_sequence(view)
            self.assertEqual(sum(degrees.degrees), 2 * view.edge_count)
            self.assertEqual(degrees.edge_count, view.edge_count)

    def test_degree_rank(self):
        view = path_with_isolated()
        self.assertEqual(degree_rank(view), [(1, 2), (2, 1), (3, 1), (4, 0)])

    def test_degree_rank_is_sorted_permutation(self):
        view = threshold_view(random_graph(3, 80, 0.08), 1)
        ranked = [degree for _, degree in degree_rank(view)]
        self.assertEqual(sorted(ranked), sorted(degree_sequence(view).degrees))
        self.assertEqual(ranked, sorted(ranked, reverse=True))

    def test_frequency_degree_table(self):
        rows = frequency_degree_table(path_with_isolated())
        self.assertEqual([(r.rank, r.frequency, r.degree) for r in rows], [(1, 4, 1), (2, 3, 2), (3, 2, 1), (4, 1, 0)])

    def test_correlation(self):
        graph = labelled_graph({b"a": 4, b"b": 3, b"c": 2, b"d": 1}, [(b"a", b"b"), (b"a", b"c"), (b"a", b"d"), (b"b", b"c")])
        # degrees 3, 2, 2, 1 follow the frequencies
        self.assertGreater(frequency_degree_correlation(threshold_view(graph, 1)), 0.9)
        self.assertIsNone(frequency_degree_correlation(threshold_view(graph, 0)))


class PowerLawTests(TestCase):
    def test_recovers_known_exponent(self):
        for exponent in (2.0, 2.5, 3.0):
            samples = sample_discrete_power_law(exponent, 1, 100_000, seed=7)
            fit = fit_power_law(samples, x_min=1)
            self.assertAlmostEqual(fit.exponent, exponent, delta=0.1)
            self.assertEqual(fit.sample_count, 100_000)
            self.assertLess(fit.log_likelihood, 0)

    def test_samples_below_x_min_are_excluded(self):
        fit = fit_power_law([1, 1, 1, 5, 7, 9], x_min=5, min_samples=3)
        self.assertEqual(fit.sample_count, 3)
        self.assertEqual(fit.x_min, 5)
        self.assertGreater(fit.exponent, 1)

    def test_constant_samples(self):
        with self.assertRaises(DegenerateFitError):
            fit_power_law([3] * 100)

    def test_too_few_samples(self):
        with self.assertRaises(InsufficientDataError):
            fit_power_law([1, 2] * 10)

    def test_non_positive_samples(self):
        with self.assertRaises(ArgumentError):
            fit_power_law([0, 1, 2] * 30)

    def test_sampler_is_seeded(self):
        a = sample_discrete_power_law(2.5, 2, 1000, seed=3)
        b = sample_discrete_power_law(2.5, 2, 1000, seed=3)
        self.assertEqual(a.tolist(), b.tolist())
        self.assertGreaterEqual(a.min(), 2)


class ComponentTests(TestCase):
    def test_path_plus_isolated(self):
        self.assertEqual(connected_components(path_with_isolated()), (0, 0, 0, 1))

    def test_edgeless(self):
        view = threshold_view(graph_from_edges(numbered_corpus([1] * 5), []), 1)
        self.assertEqual(connected_components(view), (0, 1, 2, 3, 4))

    def test_ids_follow_smallest_member(self):
        view = threshold_view(graph_from_edges(numbered_corpus([1] * 5), [(3, 0), (4, 1)]), 1)
        self.assertEqual(connected_components(view), (0, 1, 2, 0, 1))
        self.assertEqual(component_count(view), 3)

    def test_adding_edges_never_increases_count(self):
        rng = random.Random(11)
        corpus = numbered_corpus([1] * 30)
        pairs = [(i, j) for i in range(30) for j in range(i + 1, 30)]
        rng.shuffle(pairs)
        counts = [component_count(threshold_view(graph_from_edges(corpus, pairs[:k]), 1)) for k in range(0, 60, 3)]
        self.assertEqual(counts, sorted(counts, reverse=True))


class CommunityTests(TestCase):
    def test_two_cliques_match_modularity_optimum(self):
        view = threshold_view(two_cliques_with_bridge(4), 1)
        best = max(set_partitions(8), key=lambda labels: modularity(view, labels))
        assignment = detect_communities(view, seed=0)
        self.assertEqual(assignment.community_count, 2)
        self.assertEqual(assignment.labels, best)
        self.assertAlmostEqual(assignment.modularity, modularity(view, best))

    def test_seed_reproducible(self):
        view = threshold_view(random_graph(5, 120, 0.04), 1)
        for seed in (0, 1, 99):
            self.assertEqual(detect_communities(view, seed).labels, detect_communities(view, seed).labels)

    def test_communities_refine_components(self):
        for seed in range(4):
            view = threshold_view(random_graph(seed, 100, 0.02), 1)
            components = connected_components(view)
            for strategy in ("label_propagation", "greedy_modularity"):
                labels = detect_communities(view, seed, strategy).labels
                by_label = {}
                for v, label in enumerate(labels):
                    self.assertEqual(by_label.setdefault(label, components[v]), components[v])

    def test_single_clique(self):
        graph = graph_from_edges(numbered_corpus([1] * 5), clique_edges(range(5)))
        assignment = detect_communities(threshold_view(graph, 1))
        self.assertEqual(assignment.labels, (0,) * 5)
        self.assertAlmostEqual(assignment.modularity, 0.0)

    def test_all_isolated(self):
        view = threshold_view(graph_from_edges(numbered_corpus([1] * 4), []), 1)
        for strategy in ("label_propagation", "greedy_modularity"):
            assignment = detect_communities(view, strategy=strategy)
            self.assertEqual(assignment.labels, (0, 1, 2, 3))
            self.assertEqual(assignment.modularity, 0.0)

    def test_greedy_modularity_on_two_cliques(self):
        view = threshold_view(two_cliques_with_bridge(4), 1)
        assignment = detect_communities(view, strategy="greedy_modularity")
        self.assertEqual(assignment.labels, (0, 0, 0, 0, 1, 1, 1, 1))

    def test_unknown_strategy(self):
        with self.assertRaises(ArgumentError):
            detect_communities(path_with_isolated(), strategy="louvain")

    def test_sizes_and_filter(self):
        view = path_with_isolated()
        assignment = detect_communities(view)
        self.assertEqual(community_sizes(assignment), (3, 1))
        self.assertEqual(filter_small_communities(assignment, 0.5), (0, 1, 2))
        self.assertEqual(filter_small_communities(assignment, 0.0), (0, 1, 2, 3))
        with self.assertRaises(ArgumentError):
            filter_small_communities(assignment, 1.5)


class ModularityTests(TestCase):
    def test_single_community_is_zero(self):
        view = threshold_view(random_graph(2, 30, 0.2), 1)
        self.assertAlmostEqual(modularity(view, [0] * 30), 0.0)

    def test_two_disjoint_equal_cliques(self):
        graph = graph_from_edges(numbered_corpus([1] * 6), clique_edges([0, 1, 2]) + clique_edges([3, 4, 5]))
        self.assertAlmostEqual(modularity(threshold_view(graph, 1), [0, 0, 0, 1, 1, 1]), 0.5)

    def test_edgeless_is_zero(self):
        view = threshold_view(graph_from_edges(numbered_corpus([1] * 3), []), 1)
        self.assertEqual(modularity(view, [0, 1, 2]), 0.0)

    def test_unlabeled_node(self):
        with self.assertRaises(ArgumentError):
            modularity(path_with_isolated(), [0, 0, 0])
        with self.assertRaises(ArgumentError):
            modularity(path_with_isolated(), [0, 0, None, 1])
