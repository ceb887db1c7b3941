"""
Synthetic corpora and graphs with known ground truth.

Leaked corpora are not shipped, so tests and acceptance scenarios run on these.
Every generator takes a seed and is deterministic for it.
"""
import random
import string
from typing import Dict, Iterable, List, Sequence, Tuple

from corpus.models import Corpus
from simjoin.models import PasswordGraph
from simjoin.services.join import graph_from_edges

MIXED_ALPHABETS = (
    string.ascii_lowercase.encode(),
    string.digits.encode(),
    (string.ascii_lowercase + string.digits).encode(),
    (string.ascii_letters + string.digits + "!@#$%. ").encode(),
)


def random_corpus(seed: int, size: int, min_len: int = 1, max_len: int = 16, max_frequency: int = 20) -> Corpus:
    """`size` distinct random strings over mixed alphabets; frequencies uniform in 1..max_frequency."""
    rng = random.Random(seed)
    counts: Dict[bytes, int] = {}
    while len(counts) < size:
        alphabet = rng.choice(MIXED_ALPHABETS)
        word = bytes(rng.choice(alphabet) for _ in range(rng.randint(min_len, max_len)))
        counts.setdefault(word, rng.randint(1, max_frequency))
    return Corpus.from_counts(counts)


def _mutate(rng: random.Random, word: bytes) -> bytes:
    choice = rng.randrange(5)
    if choice == 0:
        return word + str(rng.randint(0, 99)).encode()
    if choice == 1 and word:
        i = rng.randrange(len(word))
        return word[:i] + bytes((rng.choice(b"0123456789@!"),)) + word[i + 1:]
    if choice == 2 and word:
        return word[:1].upper() + word[1:]
    if choice == 3 and len(word) > 1:
        i = rng.randrange(len(word))
        return word[:i] + word[i + 1:]
    return word + word[-2:]


def zipf_corpus(seed: int, unique: int, exponent: float = 1.0, top_frequency: int = 50_000) -> Corpus:
    """
    Password-like corpus: random base words plus mutations of them (appended digits,
    substitutions, capitalisation, deletions), so the similarity graph has structure.
    Frequency of rank i is max(1, round(top_frequency / i**exponent)).
    """
    rng = random.Random(seed)
    words: List[bytes] = []
    seen = set()
    while len(words) < unique:
        if not words or rng.random() < 0.3:
            length = rng.randint(5, 10)
            word = bytes(rng.choice(b"abcdefghijklmnopqrstuvwxyz") for _ in range(length))
        else:
            word = _mutate(rng, rng.choice(words))
        if word and word not in seen:
            seen.add(word)
            words.append(word)
    rng.shuffle(words)
    counts = {
        word: max(1, round(top_frequency / (rank ** exponent)))
        for rank, word in enumerate(words, start=1)
    }
    return Corpus.from_counts(counts)


def numbered_corpus(frequencies: Sequence[int]) -> Corpus:
    """Corpus of passwords b"n00000".. whose canonical order follows `frequencies` sorted descending."""
    ordered = sorted(frequencies, reverse=True)
    return Corpus.from_counts({b"n%05d" % i: f for i, f in enumerate(ordered)})


def labelled_graph(counts: Dict[bytes, int], edges: Iterable[Tuple[bytes, bytes]], t_build: int = 1) -> PasswordGraph:
    """Graph given by password pairs; ids follow the corpus canonical order."""
    corpus = Corpus.from_counts(counts)
    return graph_from_edges(corpus, [(corpus.index_of(a), corpus.index_of(b)) for a, b in edges], t_build)


def random_graph(seed: int, n: int, p: float, max_frequency: int = 20, max_distance: int = 1) -> PasswordGraph:
    """G(n, p) over a numbered corpus with random frequencies and edge distances."""
    rng = random.Random(seed)
    corpus = numbered_corpus([rng.randint(1, max_frequency) for _ in range(n)])
    edges = [
        (i, j, rng.randint(1, max_distance))
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return graph_from_edges(corpus, edges, max_distance)


def connected_random_graph(seed: int, n: int, p: float, max_frequency: int = 20) -> PasswordGraph:
    """Random spanning tree plus G(n, p) edges, so the graph is connected."""
    rng = random.Random(seed)
    corpus = numbered_corpus([rng.randint(1, max_frequency) for _ in range(n)])
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for k in range(1, n):
        a, b = order[k], order[rng.randrange(k)]
        edges.add((min(a, b), max(a, b)))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.add((i, j))
    return graph_from_edges(corpus, sorted(edges))


def min_degree_graph(seed: int, n: int, k: int, p: float = 0.05) -> PasswordGraph:
    """Random graph whose minimum degree is at least k (needs n > k)."""
    if n <= k:
        raise ValueError(f"need n > k, got n={n}, k={k}")
    rng = random.Random(seed)
    corpus = numbered_corpus([rng.randint(1, 20) for _ in range(n)])
    adjacency = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adjacency[i].add(j)
                adjacency[j].add(i)
    for v in range(n):
        while len(adjacency[v]) < k:
            u = rng.randrange(n)
            if u != v and u not in adjacency[v]:
                adjacency[v].add(u)
                adjacency[u].add(v)
    edges = sorted((i, j) for i in range(n) for j in adjacency[i] if i < j)
    return graph_from_edges(corpus, edges)


def clique_edges(nodes: Sequence[int]) -> List[Tuple[int, int]]:
    return [(a, b) for x, a in enumerate(nodes) for b in nodes[x + 1:]]


def two_cliques_with_bridge(size: int = 4) -> PasswordGraph:
    """Two K_size cliques (ids 0..size-1 and size..2size-1) joined by one bridge edge."""
    corpus = numbered_corpus([1] * (2 * size))
    left, right = list(range(size)), list(range(size, 2 * size))
    edges = clique_edges(left) + clique_edges(right) + [(size - 1, size)]
    return graph_from_edges(corpus, edges)
