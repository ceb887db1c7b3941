import random
from unittest import TestCase

from corpus.models import Corpus
from general.errors import ArgumentError, ResourceGuardError
from metric.services.distance import levenshtein
from simjoin.services.join import (
    JoinGuardError,
    build_graph,
    corpus_from_graph,
    graph_from_edges,
    verify_join,
)
from simjoin.services.views import threshold_view
from testing.synthetic.generators import random_corpus


class BuildGraphTests(TestCase):
    def test_small_example(self):
        corpus = Corpus.from_counts({b"abc": 5, b"abd": 3, b"xyz": 2})
        graph = build_graph(corpus, 1, "bucketed")
        self.assertEqual(graph.edges, ((0, 1, 1),))
        self.assertEqual(graph.node_passwords, (b"abc", b"abd", b"xyz"))
        self.assertEqual(graph.node_frequencies, (5, 3, 2))

    def test_single_record(self):
        graph = build_graph(Corpus.from_counts({b"only": 1}), 3)
        self.assertEqual(graph.edges, ())
        self.assertEqual(graph.node_count, 1)

    def test_zero_threshold_rejected(self):
        with self.assertRaises(ArgumentError):
            build_graph(Corpus.from_counts({b"a": 1}), 0)

    def test_unknown_strategy(self):
        with self.assertRaises(ArgumentError):
            build_graph(Corpus.from_counts({b"a": 1}), 1, "quadtree")

    def test_strategies_agree_on_random_corpora(self):
        for seed in range(4):
            corpus = random_corpus(seed, 150)
            for t in (1, 2, 3):
                naive = build_graph(corpus, t, "naive")
                self.assertEqual(build_graph(corpus, t, "bucketed").edges, naive.edges)
                self.assertEqual(build_graph(corpus, t, "bktree").edges, naive.edges)

    def test_edges_are_symmetric_and_exact(self):
        corpus = random_corpus(42, 200, max_len=6)
        graph = build_graph(corpus, 3, "bucketed")
        for i, neighbors in enumerate(graph.adjacency):
            for j, d in neighbors:
                self.assertNotEqual(i, j)
                self.assertIn((i, d), graph.adjacency[j])
                self.assertTrue(1 <= d <= 3)
                self.assertEqual(d, levenshtein(graph.node_passwords[i], graph.node_passwords[j]))

    def test_worker_count_does_not_change_output(self):
        corpus = random_corpus(8, 600, max_len=8)
        single = build_graph(corpus, 2, "bucketed", workers=1)
        pooled = build_graph(corpus, 2, "bucketed", workers=2)
        self.assertEqual(single.edges, pooled.edges)
        self.assertEqual(single.comparisons, pooled.comparisons)

    def test_bucketing_skips_distant_lengths(self):
        corpus = Corpus.from_counts({b"a" * length: 1 for length in (1, 5, 9, 13)})
        graph = build_graph(corpus, 3, "bucketed")
        self.assertEqual(graph.comparisons, 0)
        self.assertEqual(graph.edges, ())


class VerifyJoinTests(TestCase):
    def test_random_corpus(self):
        self.assertTrue(verify_join(random_corpus(1, 300), 2))

    def test_equal_length_strings(self):
        rng = random.Random(4)
        counts = {bytes(rng.choice(b"abc") for _ in range(5)): 1 for _ in range(200)}
        self.assertTrue(verify_join(Corpus.from_counts(counts), 2))

    def test_distant_lengths(self):
        corpus = Corpus.from_counts({b"x" * length: 1 for length in (2, 6, 10)})
        self.assertTrue(verify_join(corpus, 3))

    def test_bktree_strategy(self):
        self.assertTrue(verify_join(random_corpus(2, 200), 3, strategy="bktree"))

    def test_size_guard(self):
        with self.assertRaises(JoinGuardError) as ctx:
            verify_join(random_corpus(3, 50), 1, limit=10)
        self.assertIsInstance(ctx.exception, ResourceGuardError)


class ThresholdViewTests(TestCase):
    def setUp(self):
        self.graph = build_graph(random_corpus(5, 250, max_len=6), 3)

    def test_full_threshold_is_identity(self):
        self.assertEqual(threshold_view(self.graph, 3).edges, self.graph.edges)

    def test_zero_threshold_is_edgeless(self):
        view = threshold_view(self.graph, 0)
        self.assertEqual(view.edge_count, 0)
        self.assertTrue(all(view.degree(v) == 0 for v in range(view.node_count)))

    def test_nested_views(self):
        views = [set(threshold_view(self.graph, t).edges) for t in (0, 1, 2, 3)]
        for smaller, larger in zip(views, views[1:]):
            self.assertTrue(smaller <= larger)
        self.assertEqual(views[1], set(build_graph(corpus_from_graph(self.graph), 1).edges))

    def test_above_build_threshold_rejected(self):
        with self.assertRaises(ArgumentError):
            threshold_view(self.graph, 4)

    def test_without_isolated(self):
        corpus = Corpus.from_counts({b"abc": 2, b"abd": 1, b"zzzzzzz": 1})
        view = threshold_view(build_graph(corpus, 1), 1)
        self.assertEqual(view.without_isolated(), (0, 1))


class GraphTransformationTests(TestCase):
    def test_corpus_round_trip(self):
        corpus = random_corpus(6, 100)
        self.assertEqual(corpus_from_graph(build_graph(corpus, 1)), corpus)

    def test_graph_from_edges_validates(self):
        corpus = Corpus.from_counts({b"a": 1, b"b": 1})
        with self.assertRaises(ArgumentError):
            graph_from_edges(corpus, [(0, 0)])
        with self.assertRaises(ArgumentError):
            graph_from_edges(corpus, [(0, 2)])
        with self.assertRaises(ArgumentError):
            graph_from_edges(corpus, [(0, 1, 2)], t_build=1)

    def test_graph_from_edges_dedupes(self):
        corpus = Corpus.from_counts({b"a": 1, b"b": 1})
        graph = graph_from_edges(corpus, [(1, 0), (0, 1)])
        self.assertEqual(graph.edges, ((0, 1, 1),))
