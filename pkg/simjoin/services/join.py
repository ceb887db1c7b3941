"""
Similarity self-join: every pair of unique passwords at edit distance <= t.

Strategies (identical edge sets, checked by verify_join):
- naive:    all n(n-1)/2 pairs, unbounded distance, then filter. The oracle.
- bucketed: passwords grouped by length; only bucket pairs with a length gap <= t are
            compared, with the bounded distance. Bucket rows fan out over worker
            processes; the merge sorts edges by (min id, max id), so the output does not
            depend on the worker count.
- bktree:   BK-tree radius queries.
"""
import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Sequence, Tuple

import Levenshtein
from django.conf import settings

from corpus.models import Corpus
from corpus.services.parsing import EmptyCorpusError
from general.errors import ArgumentError, ResourceGuardError
from metric.services.distance import as_symbols, bounded_symbol_distance
from simjoin import config
from simjoin.models import Edge, PasswordGraph
from simjoin.services.bktree import BKTree

logger = logging.getLogger(__name__)


class JoinGuardError(ResourceGuardError):
    pass


def _naive_join(symbols: Sequence[str], t: int) -> Tuple[List[Edge], int]:
    edges = []
    comparisons = 0
    n = len(symbols)
    for i in range(n):
        a = symbols[i]
        for j in range(i + 1, n):
            comparisons += 1
            d = Levenshtein.distance(a, symbols[j])
            if d <= t:
                edges.append((i, j, d))
    return edges, comparisons


def _join_bucket_rows(task) -> Tuple[List[Edge], int]:
    """Compare rows[start:stop] of one bucket against another bucket. Runs in workers."""
    rows, columns, same_bucket, t = task
    edges = []
    comparisons = 0
    for position, (i, a) in enumerate(rows):
        candidates = columns[position + 1:] if same_bucket else columns
        for j, b in candidates:
            comparisons += 1
            d = bounded_symbol_distance(a, b, t)
            if d is not None:
                edges.append((i, j, d) if i < j else (j, i, d))
    return edges, comparisons


def _bucket_tasks(symbols: Sequence[str], t: int, chunk_rows: int):
    buckets: Dict[int, List[Tuple[int, str]]] = defaultdict(list)
    for i, s in enumerate(symbols):
        buckets[len(s)].append((i, s))
    lengths = sorted(buckets)
    for la in lengths:
        rows_all = buckets[la]
        for lb in lengths:
            if lb < la or lb - la > t:
                continue
            same = la == lb
            for start in range(0, len(rows_all), chunk_rows):
                rows = rows_all[start:start + chunk_rows]
                # within one bucket, row k is compared with the columns after it only
                columns = rows_all[start:] if same else buckets[lb]
                yield rows, columns, same, t


def _bucketed_join(symbols: Sequence[str], t: int, workers: int, chunk_rows: int) -> Tuple[List[Edge], int]:
    tasks = list(_bucket_tasks(symbols, t, chunk_rows))
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_join_bucket_rows, tasks))
    else:
        results = [_join_bucket_rows(task) for task in tasks]
    edges = [edge for part, _ in results for edge in part]
    comparisons = sum(count for _, count in results)
    return edges, comparisons


def _bktree_join(symbols: Sequence[str], t: int) -> Tuple[List[Edge], int]:
    tree = BKTree()
    for i, s in enumerate(symbols):
        tree.add(i, s)
    edges = []
    for i, s in enumerate(symbols):
        for j, d in tree.query(s, t):
            if j > i:
                edges.append((i, j, d))
    return edges, tree.comparisons


def build_graph(
    corpus: Corpus,
    t: int = config.DEFAULT_THRESHOLD,
    strategy: str = config.DEFAULT_STRATEGY,
    workers: int = None,
) -> PasswordGraph:
    if t < 1:
        raise ArgumentError(f"build_graph requires t >= 1, got {t}; use threshold_view(graph, 0) for an edgeless view")
    if strategy not in config.STRATEGIES:
        raise ArgumentError(f"Unknown join strategy '{strategy}'. Available: {', '.join(config.STRATEGIES)}")
    if corpus.unique_count == 0:
        raise EmptyCorpusError("Cannot build a graph over an empty corpus.")
    workers = workers or getattr(settings, "PWNET_JOIN_WORKERS", config.JOIN_WORKERS)
    symbols = [as_symbols(password) for password in corpus.passwords]

    logger.info(f"[build_graph] {strategy} join: {len(symbols)} nodes, t={t}, workers={workers}")
    if strategy == "naive":
        edges, comparisons = _naive_join(symbols, t)
    elif strategy == "bucketed":
        edges, comparisons = _bucketed_join(symbols, t, workers, config.JOIN_CHUNK_ROWS)
    else:
        edges, comparisons = _bktree_join(symbols, t)
    edges.sort()
    logger.info(f"[build_graph] {len(edges)} edges after {comparisons} distance evaluations")
    return PasswordGraph(
        node_passwords=corpus.passwords,
        node_frequencies=corpus.frequencies,
        edges=tuple(edges),
        t_build=t,
        strategy=strategy,
        comparisons=comparisons,
    )


def verify_join(corpus: Corpus, t: int, strategy: str = "bucketed", limit: int = None) -> bool:
    """True iff `strategy` and the naive join produce the same sorted edge list."""
    limit = limit if limit is not None else getattr(settings, "PWNET_NAIVE_JOIN_LIMIT", config.NAIVE_JOIN_LIMIT)
    if corpus.unique_count > limit:
        raise JoinGuardError(
            f"verify_join runs the naive join; {corpus.unique_count} records exceed the limit {limit}.",
            requested=corpus.unique_count,
            budget=limit,
        )
    oracle = build_graph(corpus, t, "naive")
    candidate = build_graph(corpus, t, strategy)
    same = oracle.edges == candidate.edges
    if not same:
        logger.warning(f"[verify_join] {strategy} join disagrees with naive join at t={t}")
    return same


def graph_from_edges(corpus: Corpus, edges: Iterable[Sequence[int]], t_build: int = 1) -> PasswordGraph:
    """
    Graph over `corpus` with an explicit edge list of (i, j) or (i, j, d); d defaults to 1.
    Distances are taken as given. Duplicate pairs keep their first distance.
    """
    n = corpus.unique_count
    seen = {}
    for edge in edges:
        i, j = int(edge[0]), int(edge[1])
        d = int(edge[2]) if len(edge) > 2 else 1
        if i == j:
            raise ArgumentError(f"self-loop on node {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise ArgumentError(f"edge ({i}, {j}) outside node range 0..{n - 1}")
        if not 1 <= d <= t_build:
            raise ArgumentError(f"edge distance {d} outside 1..{t_build}")
        seen.setdefault((min(i, j), max(i, j)), d)
    return PasswordGraph(
        node_passwords=corpus.passwords,
        node_frequencies=corpus.frequencies,
        edges=tuple(sorted((i, j, d) for (i, j), d in seen.items())),
        t_build=t_build,
        strategy="explicit",
    )


def corpus_from_graph(graph: PasswordGraph) -> Corpus:
    """Traverse the nodes and recover the password set with its frequencies."""
    return Corpus.from_counts(dict(zip(graph.node_passwords, graph.node_frequencies)))
