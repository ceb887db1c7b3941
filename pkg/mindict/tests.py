import math
import random
from itertools import combinations
from unittest import TestCase

from attack.models import Dictionary
from general.errors import ArgumentError, ResourceGuardError
from mindict.services.dominating import (
    ExactBudgetError,
    arnautov_bound,
    dictionary_coverage,
    exact_dominating_set,
    greedy_dominating_set,
    is_dominating,
    partial_dominating_dictionary,
)
from netstats.services.degrees import degree_sequence
from simjoin.services.join import corpus_from_graph, graph_from_edges
from simjoin.services.views import threshold_view
from testing.synthetic.generators import (
    clique_edges,
    connected_random_graph,
    labelled_graph,
    min_degree_graph,
    numbered_corpus,
    random_graph,
)


def brute_force_gamma(view):
    for size in range(1, view.node_count + 1):
        if any(is_dominating(view, subset) for subset in combinations(range(view.node_count), size)):
            return size


def path_abc():
    graph = labelled_graph({b"a": 5, b"b": 3, b"c": 2}, [(b"a", b"b"), (b"b", b"c")])
    return threshold_view(graph, 1), corpus_from_graph(graph)


class GreedyDominatingSetTests(TestCase):
    def test_star(self):
        graph = labelled_graph(
            {b"a": 9, b"b": 8, b"c": 7, b"d": 6, b"hub": 1},
            [(b"hub", leaf) for leaf in (b"a", b"b", b"c", b"d")],
        )
        result = greedy_dominating_set(threshold_view(graph, 1))
        self.assertEqual(result.nodes, (4,))
        self.assertTrue(result.is_dominating)

    def test_path(self):
        view, _ = path_abc()
        result = greedy_dominating_set(view)
        self.assertEqual(result.nodes, (1,))
        self.assertEqual(result.size, brute_force_gamma(view))
        self.assertEqual(result.covered_accounts, 10)

    def test_edgeless(self):
        view = threshold_view(graph_from_edges(numbered_corpus([3, 2, 1]), []), 1)
        result = greedy_dominating_set(view)
        self.assertEqual(sorted(result.nodes), [0, 1, 2])
        self.assertEqual(result.arnautov_bound, 3.0)

    def test_within_arnautov_bound(self):
        for k in (1, 2, 3):
            for seed in range(5):
                view = threshold_view(min_degree_graph(seed, 80, k), 1)
                self.assertGreaterEqual(degree_sequence(view).min_degree, k)
                result = greedy_dominating_set(view)
                self.assertTrue(result.is_dominating)
                self.assertLessEqual(result.size, arnautov_bound(80, k) + 1e-9)

    def test_to_dictionary(self):
        view, _ = path_abc()
        dictionary = greedy_dominating_set(view).to_dictionary()
        self.assertEqual(dictionary, Dictionary((1,), "custom"))


class ExactDominatingSetTests(TestCase):
    def test_path_of_four(self):
        graph = graph_from_edges(numbered_corpus([1] * 4), [(0, 1), (1, 2), (2, 3)])
        self.assertEqual(exact_dominating_set(threshold_view(graph, 1)).size, 2)

    def test_complete_graph(self):
        graph = graph_from_edges(numbered_corpus([1] * 5), clique_edges(range(5)))
        result = exact_dominating_set(threshold_view(graph, 1))
        self.assertEqual(result.size, 1)
        self.assertEqual(result.method, "exact")

    def test_matches_brute_force_and_beats_greedy(self):
        rng = random.Random(3)
        for seed in range(30):
            n = rng.randint(1, 12)
            view = threshold_view(random_graph(seed, n, rng.uniform(0.1, 0.5)), 1)
            exact = exact_dominating_set(view)
            greedy = greedy_dominating_set(view)
            self.assertTrue(exact.is_dominating)
            self.assertEqual(exact.size, brute_force_gamma(view))
            self.assertLessEqual(exact.size, greedy.size)

    def test_greedy_guarantee(self):
        for seed in range(20):
            view = threshold_view(connected_random_graph(seed, 15, 0.15), 1)
            delta = degree_sequence(view).max_degree
            exact = exact_dominating_set(view)
            self.assertLessEqual(greedy_dominating_set(view).size, exact.size * (math.log(delta + 1) + 1))

    def test_budget(self):
        view = threshold_view(random_graph(1, 21, 0.2), 1)
        with self.assertRaises(ExactBudgetError) as ctx:
            exact_dominating_set(view)
        self.assertIsInstance(ctx.exception, ResourceGuardError)
        self.assertEqual(ctx.exception.requested, 21)
        self.assertEqual(exact_dominating_set(view, node_budget=21).method, "exact")


class ArnautovBoundTests(TestCase):
    def test_zero_degree(self):
        self.assertEqual(arnautov_bound(17, 0), 17)

    def test_value(self):
        self.assertAlmostEqual(arnautov_bound(100, 3), 59.657, places=3)

    def test_non_increasing_in_degree(self):
        values = [arnautov_bound(100, k) for k in range(51)]
        self.assertEqual(values, sorted(values, reverse=True))

    def test_invalid(self):
        with self.assertRaises(ArgumentError):
            arnautov_bound(0, 1)
        with self.assertRaises(ArgumentError):
            arnautov_bound(5, -1)


class PartialDictionaryTests(TestCase):
    def test_zero_ratio(self):
        view, corpus = path_abc()
        self.assertEqual(partial_dominating_dictionary(view, corpus, 0).ordering, ())

    def test_full_ratio_dominates(self):
        for seed in range(5):
            graph = random_graph(seed, 60, 0.05)
            view, corpus = threshold_view(graph, 1), corpus_from_graph(graph)
            dictionary = partial_dominating_dictionary(view, corpus, 1.0)
            self.assertTrue(is_dominating(view, dictionary.ordering))

    def test_path_trace(self):
        view, corpus = path_abc()
        self.assertEqual(partial_dominating_dictionary(view, corpus, 0.8).ordering, (1,))

    def test_coverage_monotone_along_picks(self):
        graph = random_graph(8, 80, 0.04)
        view, corpus = threshold_view(graph, 1), corpus_from_graph(graph)
        dictionary = partial_dominating_dictionary(view, corpus, 0.9)
        ratios = [
            dictionary_coverage(view, corpus, Dictionary(dictionary.prefix(size))).ratio
            for size in range(len(dictionary) + 1)
        ]
        self.assertEqual(ratios, sorted(ratios))
        self.assertGreaterEqual(ratios[-1], 0.9)
        self.assertLess(ratios[-2], 0.9)

    def test_ratio_out_of_range(self):
        view, corpus = path_abc()
        for ratio in (-0.1, 1.5):
            with self.assertRaises(ArgumentError):
                partial_dominating_dictionary(view, corpus, ratio)
