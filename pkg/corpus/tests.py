import io
import random
import tempfile
from pathlib import Path
from unittest import TestCase

from corpus.models import Corpus, PasswordRecord
from corpus.services.parsing import (
    CorpusInputError,
    CorpusParseError,
    CorpusWriteError,
    EmptyCorpusError,
    load_corpus,
    parse_counted,
    parse_plain,
    write_counted,
)
from corpus.services.stats import corpus_stats, top_n
from general.errors import ArgumentError


class ParsePlainTests(TestCase):
    def test_duplicates_are_aggregated(self):
        corpus = parse_plain([b"abc", b"abc", b"xyz"])
        self.assertEqual(corpus.as_counts(), {b"abc": 2, b"xyz": 1})
        self.assertEqual(corpus.total_accounts, 3)
        self.assertEqual(corpus.unique_count, 2)

    def test_single_line(self):
        corpus = parse_plain([b"a"])
        self.assertEqual(corpus.records, (PasswordRecord(b"a", 1),))

    def test_lf_and_crlf_terminators(self):
        corpus = parse_plain(io.BytesIO(b"abc\r\nabc\nxyz\n"))
        self.assertEqual(corpus.as_counts(), {b"abc": 2, b"xyz": 1})

    def test_zero_lines_is_empty_corpus_error(self):
        with self.assertRaises(EmptyCorpusError):
            parse_plain([])

    def test_empty_lines_are_kept_and_flagged(self):
        corpus = parse_plain([b"", b"a", b""])
        self.assertEqual(corpus.as_counts(), {b"": 2, b"a": 1})
        self.assertEqual(corpus.empty_password_count, 2)

    def test_unreadable_stream_is_input_error(self):
        def broken():
            yield b"a\n"
            raise OSError("disk went away")

        with self.assertRaises(CorpusInputError):
            parse_plain(broken())

    def test_raw_bytes_are_not_decoded(self):
        corpus = parse_plain([b"\xff\xfe", b"\xff\xfe"])
        self.assertEqual(corpus.as_counts(), {b"\xff\xfe": 2})

    def test_known_duplicate_plan(self):
        rng = random.Random(7)
        plan = {}
        while len(plan) < 2000:
            word = bytes(rng.choice(b"abcdefgh0123") for _ in range(rng.randint(1, 8)))
            plan.setdefault(word, rng.randint(1, 9))
        lines = [word for word, count in plan.items() for _ in range(count)]
        lines = lines[:10_000]
        expected = {}
        for word in lines:
            expected[word] = expected.get(word, 0) + 1
        rng.shuffle(lines)
        corpus = parse_plain(lines)
        self.assertEqual(corpus.as_counts(), expected)
        self.assertEqual(corpus.total_accounts, len(lines))

    def test_permutation_invariance(self):
        lines = [b"pw%d" % (i % 37) for i in range(500)]
        shuffled = list(lines)
        random.Random(3).shuffle(shuffled)
        self.assertEqual(parse_plain(lines), parse_plain(shuffled))

    def test_canonical_order(self):
        corpus = parse_plain([b"b", b"a", b"c", b"c", b"b"])
        self.assertEqual(corpus.passwords, (b"b", b"c", b"a"))


class ParseCountedTests(TestCase):
    def test_withcount_lines(self):
        corpus = parse_counted([b"  5 password", b"  3 123456"])
        self.assertEqual(corpus.as_counts(), {b"password": 5, b"123456": 3})

    def test_duplicate_passwords_are_summed(self):
        self.assertEqual(parse_counted([b"2 a", b"3 a"]).as_counts(), {b"a": 5})

    def test_password_keeps_inner_and_leading_spaces(self):
        corpus = parse_counted([b"4 my pass", b"1  lead"])
        self.assertEqual(corpus.as_counts(), {b"my pass": 4, b" lead": 1})

    def test_whitespace_policy_swallows_separator_run(self):
        corpus = parse_counted([b"1 \tlead"], separator_policy="whitespace")
        self.assertEqual(corpus.as_counts(), {b"lead": 1})

    def test_malformed_line_reports_line_number(self):
        with self.assertRaises(CorpusParseError) as ctx:
            parse_counted([b"1 ok", b"nocount"])
        self.assertEqual(ctx.exception.line_number, 2)

    def test_zero_count_rejected(self):
        with self.assertRaises(CorpusParseError) as ctx:
            parse_counted([b"0 a"])
        self.assertEqual(ctx.exception.line_number, 1)

    def test_unknown_policy(self):
        with self.assertRaises(ArgumentError):
            parse_counted([b"1 a"], separator_policy="tabs")

    def test_empty_stream(self):
        with self.assertRaises(EmptyCorpusError):
            parse_counted([])

    def test_write_then_parse_is_identity(self):
        corpus = parse_plain([b"a b", b"a b", b"\xff", b"x,y", b" lead", b"z"])
        sink = io.BytesIO()
        write_counted(corpus, sink)
        sink.seek(0)
        self.assertEqual(parse_counted(sink), corpus)

    def test_carriage_returns_survive_write_then_parse(self):
        corpus = parse_plain(io.BytesIO(b"abc\r\r\nabc\r\r\na\rb\n"))
        self.assertEqual(corpus.as_counts(), {b"abc\r": 2, b"a\rb": 1})
        sink = io.BytesIO()
        write_counted(corpus, sink)
        self.assertEqual(sink.getvalue(), b"2 abc\r\n1 a\rb\n")
        sink.seek(0)
        self.assertEqual(parse_counted(sink), corpus)

    def test_line_feed_in_password_cannot_be_written(self):
        with self.assertRaises(CorpusWriteError):
            write_counted(Corpus.from_counts({b"a\nb": 1}), io.BytesIO())


class LoadCorpusTests(TestCase):
    def test_load_both_formats(self):
        with tempfile.TemporaryDirectory() as tmp:
            plain = Path(tmp) / "plain.txt"
            plain.write_bytes(b"abc\nabc\nxyz\n")
            counted = Path(tmp) / "counted.txt"
            counted.write_bytes(b"   2 abc\n   1 xyz\n")
            self.assertEqual(load_corpus(plain, "plain"), load_corpus(counted, "counted"))

    def test_missing_file(self):
        with self.assertRaises(CorpusInputError):
            load_corpus("/nonexistent/passwords.txt")

    def test_unknown_format(self):
        with self.assertRaises(ArgumentError):
            load_corpus("whatever", "json")


class TopNTests(TestCase):
    def setUp(self):
        self.corpus = Corpus.from_counts({b"a": 5, b"b": 3, b"c": 1})

    def test_prefix(self):
        self.assertEqual(top_n(self.corpus, 2).as_counts(), {b"a": 5, b"b": 3})

    def test_n_larger_than_corpus(self):
        self.assertEqual(top_n(self.corpus, 100), self.corpus)

    def test_tie_broken_lexicographically(self):
        corpus = Corpus.from_counts({b"b": 2, b"a": 2})
        self.assertEqual(top_n(corpus, 1).as_counts(), {b"a": 2})

    def test_zero_rejected(self):
        with self.assertRaises(ArgumentError):
            top_n(self.corpus, 0)


class CorpusStatsTests(TestCase):
    def test_lowercase_only(self):
        stats = corpus_stats(Corpus.from_counts({b"abc": 1}))
        self.assertEqual(stats.length_histogram, {3: 1})
        self.assertEqual(stats.charclass_histogram["lowercase"], 3)

    def test_mixed_classes(self):
        stats = corpus_stats(Corpus.from_counts({b"P@ss1": 1}))
        self.assertEqual(
            stats.charclass_histogram,
            {"lowercase": 2, "uppercase": 1, "digit": 1, "other": 1},
        )

    def test_space_is_other(self):
        stats = corpus_stats(Corpus.from_counts({b"a b": 1}))
        self.assertEqual(stats.charclass_histogram["other"], 1)

    def test_histograms_are_unweighted(self):
        rng = random.Random(11)
        counts = {}
        plan = {"lowercase": 0, "uppercase": 0, "digit": 0, "other": 0}
        alphabets = {"lowercase": b"abc", "uppercase": b"XYZ", "digit": b"789", "other": b"!# "}
        while len(counts) < 300:
            pieces = {name: rng.randint(0, 3) for name in alphabets}
            word = b"".join(bytes(rng.choice(alphabets[n]) for _ in range(k)) for n, k in pieces.items())
            if not word or word in counts:
                continue
            counts[word] = rng.randint(1, 50)
            for name, k in pieces.items():
                plan[name] += k
        stats = corpus_stats(Corpus.from_counts(counts))
        self.assertEqual(stats.charclass_histogram, plan)
        self.assertEqual(sum(stats.length_histogram.values()), stats.unique_count)
        self.assertEqual(stats.total_accounts, sum(counts.values()))

    def test_charclass_totals_count_characters(self):
        corpus = Corpus.from_counts({b"ab": 3, b"C1!": 1, b"": 2})
        stats = corpus_stats(corpus)
        self.assertEqual(sum(stats.charclass_histogram.values()), 5)
        self.assertEqual(sum(stats.length_histogram.values()), stats.unique_count)

    def test_empty_corpus(self):
        with self.assertRaises(EmptyCorpusError):
            corpus_stats(Corpus(()))
