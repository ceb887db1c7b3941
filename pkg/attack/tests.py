import random
from unittest import TestCase

from attack.models import Dictionary
from attack.services.coverage import (
    closed_neighborhood,
    closure_expand,
    closure_rounds,
    cracking_curve,
    cumulative_frequency,
    max_successful_guesses,
)
from attack.services.ranking import rank_by_degree, rank_by_frequency, rank_by_neighborhood_weight
from corpus.models import Corpus
from corpus.services.stats import top_n
from general.errors import ArgumentError
from netstats.services.components import connected_components
from simjoin.services.join import corpus_from_graph
from simjoin.services.views import threshold_view
from testing.synthetic.generators import labelled_graph, random_graph


def edge_and_isolated():
    """a(5)-b(3), c(2) isolated."""
    graph = labelled_graph({b"a": 5, b"b": 3, b"c": 2}, [(b"a", b"b")])
    return threshold_view(graph, 1), corpus_from_graph(graph)


def path_abc():
    """a(5)-b(3)-c(2)."""
    graph = labelled_graph({b"a": 5, b"b": 3, b"c": 2}, [(b"a", b"b"), (b"b", b"c")])
    return threshold_view(graph, 1), corpus_from_graph(graph)


class RankingTests(TestCase):
    def test_frequency_order(self):
        corpus = Corpus.from_counts({b"a": 5, b"b": 3, b"c": 1})
        self.assertEqual(rank_by_frequency(corpus).ordering, (0, 1, 2))

    def test_frequency_ties_are_lexicographic(self):
        corpus = Corpus.from_counts({b"zz": 2, b"aa": 2, b"mm": 2})
        ordering = rank_by_frequency(corpus).ordering
        self.assertEqual([corpus.passwords[v] for v in ordering], [b"aa", b"mm", b"zz"])

    def test_frequency_prefix_matches_top_n(self):
        graph = random_graph(4, 50, 0.1)
        corpus = corpus_from_graph(graph)
        ordering = rank_by_frequency(corpus).ordering
        for n in (1, 7, 50):
            self.assertEqual(tuple(corpus.passwords[v] for v in ordering[:n]), top_n(corpus, n).passwords)

    def test_star_center_first(self):
        graph = labelled_graph(
            {b"a": 9, b"b": 8, b"c": 7, b"d": 6, b"hub": 1},
            [(b"hub", leaf) for leaf in (b"a", b"b", b"c", b"d")],
        )
        corpus = corpus_from_graph(graph)
        ordering = rank_by_degree(threshold_view(graph, 1)).ordering
        self.assertEqual(corpus.passwords[ordering[0]], b"hub")
        self.assertEqual(sorted(ordering), list(range(5)))

    def test_edgeless_degree_order_is_frequency_order(self):
        graph = random_graph(9, 40, 0.2)
        view = threshold_view(graph, 0)
        self.assertEqual(rank_by_degree(view).ordering, rank_by_frequency(corpus_from_graph(graph)).ordering)
        self.assertEqual(
            rank_by_neighborhood_weight(view, corpus_from_graph(graph)).ordering,
            rank_by_frequency(corpus_from_graph(graph)).ordering,
        )

    def test_neighborhood_weight(self):
        view, corpus = path_abc()
        self.assertEqual(rank_by_neighborhood_weight(view, corpus).ordering, (1, 0, 2))

    def test_misaligned_corpus(self):
        view, _ = path_abc()
        with self.assertRaises(ArgumentError):
            rank_by_neighborhood_weight(view, Corpus.from_counts({b"a": 1}))

    def test_dictionary_rejects_duplicates(self):
        with self.assertRaises(ValueError):
            Dictionary((0, 0), "custom")


class CoverageTests(TestCase):
    def test_closed_neighborhood(self):
        view, _ = path_abc()
        self.assertEqual(closed_neighborhood(view, {1}), {0, 1, 2})
        self.assertEqual(closed_neighborhood(view, set()), frozenset())
        self.assertEqual(closed_neighborhood(view, {0, 1, 2}), {0, 1, 2})

    def test_unknown_node(self):
        view, _ = path_abc()
        with self.assertRaises(ArgumentError):
            closed_neighborhood(view, {3})
        with self.assertRaises(ArgumentError):
            closure_expand(view, {-1})

    def test_max_successful_guesses(self):
        view, corpus = edge_and_isolated()
        self.assertEqual(max_successful_guesses(view, corpus, Dictionary((0,)), 1), 8)
        self.assertEqual(max_successful_guesses(view, corpus, Dictionary((0, 2, 1)), 3), 10)
        edgeless = threshold_view(view.base, 0)
        self.assertEqual(max_successful_guesses(edgeless, corpus, Dictionary((0,)), 1), 5)

    def test_size_out_of_range(self):
        view, corpus = edge_and_isolated()
        for size in (0, 4):
            with self.assertRaises(ArgumentError):
                max_successful_guesses(view, corpus, Dictionary((0, 1, 2)), size)

    def test_cracking_curve_steps(self):
        view, corpus = edge_and_isolated()
        curve = cracking_curve(view, corpus, Dictionary((0, 2, 1)))
        self.assertEqual([(p.size, p.gmax) for p in curve.points], [(1, 8), (2, 10), (3, 10)])
        self.assertEqual(curve.points[-1].ratio, 1.0)

    def test_edgeless_curve_is_cumulative_frequency(self):
        graph = random_graph(3, 30, 0.3)
        corpus = corpus_from_graph(graph)
        dictionary = rank_by_frequency(corpus)
        curve = cracking_curve(threshold_view(graph, 0), corpus, dictionary)
        self.assertEqual(
            [p.gmax for p in curve.points],
            [cumulative_frequency(corpus, dictionary, size) for size in range(1, 31)],
        )

    def test_size_schedule(self):
        view, corpus = edge_and_isolated()
        curve = cracking_curve(view, corpus, Dictionary((0, 2, 1)), sizes=[1, 3])
        self.assertEqual([(p.size, p.gmax) for p in curve.points], [(1, 8), (3, 10)])
        with self.assertRaises(ArgumentError):
            cracking_curve(view, corpus, Dictionary((0, 2, 1)), sizes=[2, 2])
        with self.assertRaises(ArgumentError):
            cracking_curve(view, corpus, Dictionary((0, 2, 1)), sizes=[1, 4])

    def test_incremental_curve_matches_recomputation(self):
        rng = random.Random(17)
        for seed in range(25):
            n = rng.randint(1, 120)
            graph = random_graph(seed, n, rng.uniform(0.0, 0.1))
            view, corpus = threshold_view(graph, 1), corpus_from_graph(graph)
            for dictionary in (rank_by_frequency(corpus), rank_by_degree(view), rank_by_neighborhood_weight(view, corpus)):
                curve = cracking_curve(view, corpus, dictionary)
                expected = [max_successful_guesses(view, corpus, dictionary, s) for s in range(1, n + 1)]
                gmax = [p.gmax for p in curve.points]
                self.assertEqual(gmax, expected)
                self.assertEqual(gmax, sorted(gmax))
                self.assertEqual(gmax[-1], corpus.total_accounts)

    def test_coverage_dominates_plain_hits(self):
        graph = random_graph(21, 80, 0.05)
        view, corpus = threshold_view(graph, 1), corpus_from_graph(graph)
        dictionary = rank_by_frequency(corpus)
        for point in cracking_curve(view, corpus, dictionary).points:
            self.assertGreaterEqual(point.gmax, cumulative_frequency(corpus, dictionary, point.size))


class ClosureTests(TestCase):
    def test_path_closure(self):
        view, _ = path_abc()
        self.assertEqual(closure_expand(view, {0}), {0, 1, 2})

    def test_isolated_seed(self):
        view, _ = edge_and_isolated()
        self.assertEqual(closure_expand(view, {2}), {2})

    def test_matches_components(self):
        for seed in range(5):
            view = threshold_view(random_graph(seed, 60, 0.03), 1)
            components = connected_components(view)
            seeds = {seed, 2 * seed + 1}
            touched = {components[v] for v in seeds}
            expected = {v for v in range(60) if components[v] in touched}
            result = closure_expand(view, seeds)
            self.assertEqual(result, expected)
            self.assertEqual(closure_expand(view, result), result)

    def test_rounds(self):
        graph = labelled_graph(
            {b"a": 5, b"b": 4, b"c": 3, b"d": 2},
            [(b"a", b"b"), (b"b", b"c"), (b"c", b"d")],
        )
        view, corpus = threshold_view(graph, 1), corpus_from_graph(graph)
        rounds = closure_rounds(view, corpus, {0})
        self.assertEqual(
            [(r.round, r.covered_nodes, r.covered_accounts) for r in rounds],
            [(0, 1, 5), (1, 2, 9), (2, 3, 12), (3, 4, 14)],
        )
