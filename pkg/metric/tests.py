import random
from fractions import Fraction
from unittest import TestCase

import numpy as np

from general.errors import ResourceGuardError
from metric.services.distance import bounded_levenshtein, levenshtein
from metric.services.neighborhood import (
    EnumerationBudgetError,
    UnsupportedRadiusError,
    analytic_candidate_count,
    enumerate_exact_neighborhood,
    neighborhood_count_report,
    termwise_candidate_count,
    termwise_terms,
)


def matrix_levenshtein(a: bytes, b: bytes) -> int:
    """Full (len(a)+1) x (len(b)+1) dynamic-programming table, no shortcuts."""
    table = np.zeros((len(a) + 1, len(b) + 1), dtype=np.int64)
    table[:, 0] = np.arange(len(a) + 1)
    table[0, :] = np.arange(len(b) + 1)
    for i in range(1, len(a) + 1):
        for j in range(1, len(b) + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            table[i, j] = min(table[i - 1, j] + 1, table[i, j - 1] + 1, table[i - 1, j - 1] + cost)
    return int(table[len(a), len(b)])


def random_bytes(rng: random.Random, max_len: int = 10, alphabet: bytes = b"ab01\xff ") -> bytes:
    return bytes(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))


class LevenshteinTests(TestCase):
    def test_identity(self):
        self.assertEqual(levenshtein(b"abc", b"abc"), 0)

    def test_single_insertion(self):
        self.assertEqual(levenshtein(b"password", b"password1"), 1)

    def test_kitten_sitting(self):
        self.assertEqual(levenshtein(b"kitten", b"sitting"), 3)
        self.assertEqual(matrix_levenshtein(b"kitten", b"sitting"), 3)

    def test_bytes_not_code_points(self):
        # "é" is two UTF-8 bytes, so replacing it by "e" costs two edits
        self.assertEqual(levenshtein("é".encode("utf-8"), b"e"), 2)

    def test_agrees_with_matrix_oracle(self):
        rng = random.Random(2024)
        for _ in range(10_000):
            a, b = random_bytes(rng, 8), random_bytes(rng, 8)
            self.assertEqual(levenshtein(a, b), matrix_levenshtein(a, b))

    def test_metric_axioms(self):
        rng = random.Random(5)
        for _ in range(500):
            a, b, c = random_bytes(rng), random_bytes(rng), random_bytes(rng)
            self.assertEqual(levenshtein(a, a), 0)
            self.assertEqual(levenshtein(a, b), levenshtein(b, a))
            self.assertLessEqual(levenshtein(a, c), levenshtein(a, b) + levenshtein(b, c))


class BoundedLevenshteinTests(TestCase):
    def test_within_bound(self):
        self.assertEqual(bounded_levenshtein(b"abc", b"abd", 1), 1)

    def test_length_gap_exceeds(self):
        self.assertIsNone(bounded_levenshtein(b"abcdefgh", b"xyz", 3))

    def test_zero_threshold(self):
        self.assertEqual(bounded_levenshtein(b"same", b"same", 0), 0)
        self.assertIsNone(bounded_levenshtein(b"same", b"sane", 0))

    def test_negative_threshold(self):
        with self.assertRaises(ValueError):
            bounded_levenshtein(b"a", b"b", -1)

    def test_agrees_with_unbounded_distance(self):
        rng = random.Random(99)
        for _ in range(3000):
            a, b = random_bytes(rng), random_bytes(rng)
            t = rng.randint(0, 4)
            expected = levenshtein(a, b)
            got = bounded_levenshtein(a, b, t)
            if expected <= t:
                self.assertEqual(got, expected)
            else:
                self.assertIsNone(got)


class AnalyticCountTests(TestCase):
    def test_radius_one_printable_ascii(self):
        self.assertEqual(analytic_candidate_count(8, 95, 1), 1615)

    def test_radius_zero(self):
        for L, N in [(0, 1), (8, 95), (20, 256)]:
            self.assertEqual(analytic_candidate_count(L, N, 0), 1)

    def test_radius_two_closed_form(self):
        self.assertEqual(analytic_candidate_count(1, 2, 2), 14)

    def test_radius_two_matches_rational_evaluation(self):
        for L in range(0, 21):
            for N in (1, 2, 10, 95):
                value = (Fraction(3, 2) * L * L + Fraction(3, 2) * L + 1) * N * N - L * N
                self.assertEqual(value.denominator, 1)
                self.assertEqual(analytic_candidate_count(L, N, 2), value)

    def test_unsupported_radius(self):
        with self.assertRaises(UnsupportedRadiusError):
            analytic_candidate_count(3, 10, 3)

    def test_radius_one_matches_case_sum(self):
        for L in range(0, 21):
            for N in (10, 26, 62, 95, 256):
                self.assertEqual(analytic_candidate_count(L, N, 1), (2 * L + 1) * N)
                self.assertEqual(analytic_candidate_count(L, N, 1), termwise_candidate_count(L, N, 1))

    def test_radius_one_matches_case_sum_full_grid(self):
        for L in range(0, 21):
            for N in range(1, 257):
                self.assertEqual(analytic_candidate_count(L, N, 1), termwise_candidate_count(L, N, 1))


class TermwiseCountTests(TestCase):
    def test_radius_one(self):
        self.assertEqual(termwise_candidate_count(8, 95, 1), 1615)

    def test_radius_two_terms(self):
        terms = termwise_terms(1, 2, 2)
        self.assertEqual(list(terms.values()), [12, 4, 2, 0, 0, 0])
        self.assertEqual(termwise_candidate_count(1, 2, 2), 18)

    def test_empty_password(self):
        self.assertEqual(termwise_candidate_count(0, 2, 1), 2)


class ExactNeighborhoodTests(TestCase):
    def test_single_symbol(self):
        self.assertEqual(enumerate_exact_neighborhood(b"a", b"ab", 1), 5)

    def test_empty_password(self):
        self.assertEqual(enumerate_exact_neighborhood(b"", b"ab", 1), 2)

    def test_radius_zero(self):
        self.assertEqual(enumerate_exact_neighborhood(b"whatever", b"ab", 0), 1)

    def test_exact_never_exceeds_case_sum(self):
        for L in range(0, 3):
            for N in range(1, 4):
                alphabet = b"abc"[:N]
                probe = bytes(alphabet[i % N] for i in range(L))
                for k in (1, 2):
                    self.assertLessEqual(
                        enumerate_exact_neighborhood(probe, alphabet, k),
                        termwise_candidate_count(L, N, k),
                    )

    def test_budget_guard(self):
        with self.assertRaises(EnumerationBudgetError) as ctx:
            enumerate_exact_neighborhood(b"password", bytes(range(95)), 2, budget=1000)
        self.assertIsInstance(ctx.exception, ResourceGuardError)


class NeighborhoodReportTests(TestCase):
    def test_report_shows_all_three_numbers(self):
        report = neighborhood_count_report(1, 2, 2)
        self.assertEqual(report.analytic_count, 14)
        self.assertEqual(report.termwise_count, 18)
        self.assertIsNotNone(report.exact_distinct_count)
        self.assertLessEqual(report.exact_distinct_count, report.termwise_count)

    def test_no_exact_count_for_large_cases(self):
        report = neighborhood_count_report(8, 95, 1)
        self.assertIsNone(report.exact_distinct_count)
        record = report.to_record()
        self.assertIn("analytic_count=1615\n", record)
        self.assertIn("exact_distinct_count=\n", record)
