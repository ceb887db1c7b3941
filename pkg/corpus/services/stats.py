"""
Corpus selection and statistics.
"""
from collections import Counter

from corpus import config
from corpus.models import Corpus, CorpusStats
from corpus.services.parsing import EmptyCorpusError
from general.errors import ArgumentError

_LOWER = frozenset(b"abcdefghijklmnopqrstuvwxyz")
_UPPER = frozenset(b"ABCDEFGHIJKLMNOPQRSTUVWXYZ")
_DIGIT = frozenset(b"0123456789")


def top_n(corpus: Corpus, n: int) -> Corpus:
    """First n records in canonical order (the whole corpus when n >= unique_count)."""
    if n < 1:
        raise ArgumentError(f"top_n requires n >= 1, got {n}")
    if n >= corpus.unique_count:
        return corpus
    return Corpus(corpus.records[:n])


def charclass(byte: int) -> str:
    if byte in _LOWER:
        return "lowercase"
    if byte in _UPPER:
        return "uppercase"
    if byte in _DIGIT:
        return "digit"
    return "other"


def corpus_stats(corpus: Corpus) -> CorpusStats:
    """
    Histograms over unique passwords (not weighted by frequency).

    length_histogram counts passwords by byte length; charclass_histogram counts
    characters by class, so "P@ss1" adds lowercase=2, uppercase=1, digit=1, other=1.
    """
    if corpus.unique_count == 0:
        raise EmptyCorpusError("Cannot compute statistics of an empty corpus.")
    lengths = Counter(len(record.password) for record in corpus.records)
    classes = Counter({name: 0 for name in config.CHARCLASSES})
    for record in corpus.records:
        for byte in record.password:
            classes[charclass(byte)] += 1
    return CorpusStats(
        unique_count=corpus.unique_count,
        total_accounts=corpus.total_accounts,
        length_histogram=dict(sorted(lengths.items())),
        charclass_histogram={name: classes[name] for name in config.CHARCLASSES},
        empty_password_count=corpus.empty_password_count,
    )
