"""
Report writers: CSV tables and JSON documents with a stable field order.
Floats are rounded to 6 significant digits in both formats.
"""
import csv
import json
from typing import Any, List, Mapping, Optional, Sequence, TextIO, Tuple

from attack.models import CrackingCurve, Dictionary
from corpus.models import Corpus, CorpusStats
from general.display import node_label
from general.errors import ArgumentError
from mindict.models import DominatingSetResult
from mindict.services.dominating import dictionary_coverage
from netstats.models import CommunityAssignment, PowerLawFit
from netstats.services.communities import community_sizes
from pipeline import config
from simjoin.models import ThresholdView

Table = Tuple[List[str], List[List[Any]], Any]


def format_float(value: float) -> float:
    return float(format(value, config.FLOAT_FORMAT))


def _cell(value):
    if isinstance(value, float):
        return format(value, config.FLOAT_FORMAT)
    return value


def _rounded(value):
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, dict):
        return {key: _rounded(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_rounded(item) for item in value]
    return value


def write_table(header: Sequence[str], rows: Sequence[Sequence[Any]], report_format: str, sink: TextIO) -> None:
    """CSV with a header row, or JSON as a list of objects keyed by the header."""
    if report_format == "csv":
        writer = csv.writer(sink)
        writer.writerow(header)
        writer.writerows([_cell(value) for value in row] for row in rows)
    elif report_format == "json":
        write_json([dict(zip(header, row)) for row in rows], sink)
    else:
        raise ArgumentError(f"Unknown report format '{report_format}'. Available: {', '.join(config.REPORT_FORMATS)}")


def write_json(payload: Any, sink: TextIO) -> None:
    json.dump(_rounded(payload), sink, indent=2, ensure_ascii=False)
    sink.write("\n")


def _stats_table(stats: CorpusStats, corpus: Optional[Corpus], top: int, redact: bool) -> Table:
    top_rows = []
    if corpus is not None:
        for v, record in enumerate(corpus.records[:top]):
            top_rows.append((v + 1, node_label(v, record.password, redact), record.frequency))
    rows = [
        ["summary", "unique_count", stats.unique_count],
        ["summary", "total_accounts", stats.total_accounts],
        ["summary", "empty_password_count", stats.empty_password_count],
    ]
    rows += [["length", length, count] for length, count in stats.length_histogram.items()]
    rows += [["charclass", name, count] for name, count in stats.charclass_histogram.items()]
    rows += [["top", label, frequency] for _, label, frequency in top_rows]
    payload = {
        "unique_count": stats.unique_count,
        "total_accounts": stats.total_accounts,
        "empty_password_count": stats.empty_password_count,
        "length_histogram": {str(length): count for length, count in stats.length_histogram.items()},
        "charclass_histogram": dict(stats.charclass_histogram),
        "top": [{"rank": rank, "password": label, "frequency": frequency} for rank, label, frequency in top_rows],
    }
    return ["section", "key", "value"], rows, payload


def _fit_table(fit: PowerLawFit) -> Table:
    header = ["exponent", "x_min", "sample_count", "log_likelihood"]
    row = [fit.exponent, fit.x_min, fit.sample_count, fit.log_likelihood]
    return header, [row], dict(zip(header, row))


def _curve_table(curve: CrackingCurve) -> Table:
    rows = [[p.size, p.gmax, p.ratio] for p in curve.points]
    payload = {curve.label: [{"size": s, "gmax": g, "ratio": r} for s, g, r in rows]}
    return ["size", "gmax", "ratio"], rows, payload


def _curves_table(curves: Mapping[str, CrackingCurve]) -> Table:
    """Curves side by side; they must share their sizes."""
    labels = list(curves)
    sizes = [p.size for p in curves[labels[0]].points] if labels else []
    for label in labels:
        if [p.size for p in curves[label].points] != sizes:
            raise ArgumentError("side-by-side curves must be evaluated at the same sizes")
    header = ["size"]
    for label in labels:
        header += [f"gmax_{label}", f"ratio_{label}"]
    rows = []
    for k, size in enumerate(sizes):
        row = [size]
        for label in labels:
            point = curves[label].points[k]
            row += [point.gmax, point.ratio]
        rows.append(row)
    payload = {
        label: [{"size": p.size, "gmax": p.gmax, "ratio": p.ratio} for p in curves[label].points]
        for label in labels
    }
    return header, rows, payload


def _member_rows(view: ThresholdView, nodes: Sequence[int], redact: bool) -> List[List[Any]]:
    return [
        [order, v, node_label(v, view.passwords[v], redact), view.frequencies[v]]
        for order, v in enumerate(nodes, start=1)
    ]


def _dominating_table(result: DominatingSetResult, view: ThresholdView, redact: bool) -> Table:
    rows = _member_rows(view, result.nodes, redact)
    total = sum(view.frequencies)
    payload = {
        "method": result.method,
        "size": result.size,
        "nodes": [row[2] for row in rows],
        "covered_accounts": result.covered_accounts,
        "coverage_ratio": result.covered_accounts / total,
        "arnautov_bound": result.arnautov_bound,
        "is_dominating": result.is_dominating,
    }
    return ["order", "node", "password", "frequency"], rows, payload


def _dictionary_table(dictionary: Dictionary, view: ThresholdView, corpus: Corpus, redact: bool) -> Table:
    rows = _member_rows(view, dictionary.ordering, redact)
    coverage = dictionary_coverage(view, corpus, dictionary)
    payload = {
        "label": dictionary.label,
        "size": len(dictionary),
        "nodes": [row[2] for row in rows],
        "covered_accounts": coverage.covered_accounts,
        "coverage_ratio": coverage.ratio,
    }
    return ["order", "node", "password", "frequency"], rows, payload


def _community_table(
    assignment: CommunityAssignment,
    view: ThresholdView,
    redact: bool,
    nodes: Optional[Sequence[int]],
) -> Table:
    node_ids = range(view.node_count) if nodes is None else nodes
    rows = [
        [v, node_label(v, view.passwords[v], redact), view.frequencies[v], len(view.adjacency[v]), assignment.labels[v]]
        for v in node_ids
    ]
    payload = {
        "strategy": assignment.strategy,
        "seed": assignment.seed,
        "community_count": assignment.community_count,
        "modularity": assignment.modularity,
        "sizes": list(community_sizes(assignment)),
        "nodes": [dict(zip(("node", "password", "frequency", "degree", "community"), row)) for row in rows],
    }
    return ["node", "password", "frequency", "degree", "community"], rows, payload


def export_report(
    value: Any,
    report_format: str,
    sink: TextIO,
    *,
    view: Optional[ThresholdView] = None,
    corpus: Optional[Corpus] = None,
    top: int = config.DEFAULT_STATS_TOP,
    redact: bool = False,
    nodes: Optional[Sequence[int]] = None,
) -> None:
    """
    Write a computed value as CSV or JSON. Values naming graph nodes (dominating sets,
    dictionaries, community assignments) need the view to look up passwords.
    """
    if isinstance(value, CorpusStats):
        header, rows, payload = _stats_table(value, corpus, top, redact)
    elif isinstance(value, PowerLawFit):
        header, rows, payload = _fit_table(value)
    elif isinstance(value, CrackingCurve):
        header, rows, payload = _curve_table(value)
    elif isinstance(value, Mapping) and all(isinstance(c, CrackingCurve) for c in value.values()):
        header, rows, payload = _curves_table(value)
    elif view is None:
        raise ArgumentError(f"reporting {type(value).__name__} needs the graph view")
    elif isinstance(value, DominatingSetResult):
        header, rows, payload = _dominating_table(value, view, redact)
    elif isinstance(value, Dictionary):
        if corpus is None:
            raise ArgumentError("reporting a dictionary needs the corpus")
        header, rows, payload = _dictionary_table(value, view, corpus, redact)
    elif isinstance(value, CommunityAssignment):
        header, rows, payload = _community_table(value, view, redact, nodes)
    else:
        raise ArgumentError(f"no report layout for {type(value).__name__}")

    if report_format == "json":
        write_json(payload, sink)
    else:
        write_table(header, rows, report_format, sink)
