"""
run_pipeline: ingest -> build -> stage -> outputs.

Every stage returns its outputs as (path, text) pairs, path None meaning stdout.
Files are written to temporary siblings and moved into place only after the stage
finished; if anything fails, temporaries and already moved outputs are removed.
"""
import io
import logging
import os
import sys
import tempfile
from pathlib import Path
from typing import Callable, Dict, List, Optional, TextIO, Tuple

from attack import config as attack_config
from attack.services.coverage import cracking_curve
from attack.services.ranking import rank_by_degree, rank_by_frequency, rank_by_neighborhood_weight
from corpus.models import Corpus
from corpus.services.parsing import load_corpus
from corpus.services.stats import corpus_stats, top_n
from general.errors import EXIT_OK, PasswordNetworkError, exit_code_for
from metric.services.neighborhood import neighborhood_count_report
from mindict.services.dominating import (
    exact_dominating_set,
    greedy_dominating_set,
    partial_dominating_dictionary,
)
from netstats import config as netstats_config
from netstats.services.communities import detect_communities, filter_small_communities
from netstats.services.degrees import degree_rank, degree_sequence, frequency_degree_correlation
from netstats.services.powerlaw import fit_power_law
from pipeline import config as pipeline_config
from pipeline.models import RunConfig
from pipeline.services.exporters import export_graph
from pipeline.services.reports import export_report, write_table
from simjoin.models import PasswordGraph, ThresholdView
from simjoin.services.join import build_graph
from simjoin.services.views import threshold_view

logger = logging.getLogger(__name__)

Output = Tuple[Optional[str], str]


def _render(write: Callable[[TextIO], None]) -> str:
    buffer = io.StringIO(newline="")
    write(buffer)
    return buffer.getvalue()


def _corpus(config: RunConfig) -> Corpus:
    corpus = load_corpus(config.input_path, config.input_format, config.separator_policy)
    if config.top_n is not None:
        corpus = top_n(corpus, config.top_n)
    return corpus


def _graph(config: RunConfig, corpus: Corpus) -> Tuple[PasswordGraph, ThresholdView]:
    graph = build_graph(corpus, config.threshold, config.strategy, config.workers)
    return graph, threshold_view(graph, config.view_threshold)


def _communities(config: RunConfig, view: ThresholdView):
    strategy = config.method or netstats_config.DEFAULT_COMMUNITY_STRATEGY
    return detect_communities(view, seed=config.seed, strategy=strategy)


def _kept_nodes(config: RunConfig, view: ThresholdView, assignment=None) -> Optional[List[int]]:
    """Node filter from --connected-only and --min-community-fraction; None keeps everything."""
    keep = None
    if config.connected_only:
        keep = set(view.without_isolated())
    if assignment is not None and config.min_community_fraction > 0:
        large = set(filter_small_communities(assignment, config.min_community_fraction))
        keep = large if keep is None else keep & large
    return None if keep is None else sorted(keep)


def stage_stats(config: RunConfig, stderr: TextIO) -> List[Output]:
    corpus = load_corpus(config.input_path, config.input_format, config.separator_policy)
    stats = corpus_stats(corpus)
    stderr.write(f"[stats] {stats.unique_count} unique passwords, {stats.total_accounts} accounts\n")
    top = config.top_n or pipeline_config.DEFAULT_STATS_TOP
    text = _render(lambda sink: export_report(
        stats, config.report_format, sink, corpus=corpus, top=top, redact=config.redact
    ))
    return [(config.out, text)]


def stage_build(config: RunConfig, stderr: TextIO) -> List[Output]:
    graph, view = _graph(config, _corpus(config))
    stderr.write(
        f"[build] {graph.node_count} nodes, {view.edge_count} edges at t={view.t_view} "
        f"({graph.strategy}, {graph.comparisons} distance evaluations)\n"
    )
    nodes = _kept_nodes(config, view)
    text = _render(lambda sink: export_graph(view, None, config.export_format, sink, config.redact, nodes))
    return [(config.out, text)]


def stage_export(config: RunConfig, stderr: TextIO) -> List[Output]:
    _, view = _graph(config, _corpus(config))
    assignment = _communities(config, view)
    nodes = _kept_nodes(config, view, assignment)
    stderr.write(
        f"[export] {assignment.community_count} communities, "
        f"{view.node_count if nodes is None else len(nodes)} nodes exported\n"
    )
    text = _render(lambda sink: export_graph(view, assignment, config.export_format, sink, config.redact, nodes))
    return [(config.out, text)]


def stage_communities(config: RunConfig, stderr: TextIO) -> List[Output]:
    _, view = _graph(config, _corpus(config))
    assignment = _communities(config, view)
    stderr.write(
        f"[communities] {assignment.community_count} communities, modularity {assignment.modularity:.6g}\n"
    )
    nodes = _kept_nodes(config, view, assignment)
    text = _render(lambda sink: export_report(
        assignment, config.report_format, sink, view=view, redact=config.redact, nodes=nodes
    ))
    return [(config.out, text)]


def stage_fit(config: RunConfig, stderr: TextIO) -> List[Output]:
    _, view = _graph(config, _corpus(config))
    fit = fit_power_law(degree_sequence(view).positive(), x_min=config.x_min)
    correlation = frequency_degree_correlation(view)
    stderr.write(
        f"[fit] exponent {fit.exponent:.6g} over {fit.sample_count} degrees; "
        f"frequency/degree spearman {'n/a' if correlation is None else format(correlation, '.6g')}\n"
    )
    outputs = [(config.out, _render(lambda sink: export_report(fit, config.report_format, sink)))]
    if config.rank_out:
        rows = [list(row) for row in degree_rank(view)]
        outputs.append((config.rank_out, _render(lambda sink: write_table(["rank", "degree"], rows, config.report_format, sink))))
    return outputs


def stage_attack(config: RunConfig, stderr: TextIO) -> List[Output]:
    corpus = _corpus(config)
    _, view = _graph(config, corpus)
    dictionaries = {
        "frequency": rank_by_frequency(corpus),
        "degree": rank_by_degree(view),
        "neighborhood_weight": rank_by_neighborhood_weight(view, corpus),
    }
    curves = {
        label: cracking_curve(view, corpus, dictionaries[label])
        for label in attack_config.COMPARED_DICTIONARIES
    }
    for label, curve in curves.items():
        half = next((p.size for p in curve.points if p.ratio >= 0.5), None)
        stderr.write(f"[attack] {label}: half of the accounts covered after {half} guesses\n")
    return [(config.out, _render(lambda sink: export_report(curves, config.report_format, sink)))]


def stage_mindict(config: RunConfig, stderr: TextIO) -> List[Output]:
    corpus = _corpus(config)
    _, view = _graph(config, corpus)
    method = config.method or "greedy"
    if method == "partial":
        value = partial_dominating_dictionary(view, corpus, config.ratio)
        stderr.write(f"[mindict] partial: {len(value)} guesses for ratio {config.ratio:.6g}\n")
    else:
        value = exact_dominating_set(view) if method == "exact" else greedy_dominating_set(view)
        stderr.write(f"[mindict] {method}: {value.size} of {view.node_count} nodes, bound {value.arnautov_bound:.6g}\n")
    text = _render(lambda sink: export_report(
        value, config.report_format, sink, view=view, corpus=corpus, redact=config.redact
    ))
    return [(config.out, text)]


def stage_counts(config: RunConfig, stderr: TextIO) -> List[Output]:
    report = neighborhood_count_report(config.length, config.alphabet, config.radius)
    return [(config.out, report.to_record())]


STAGES: Dict[str, Callable[[RunConfig, TextIO], List[Output]]] = {
    "stats": stage_stats,
    "build": stage_build,
    "communities": stage_communities,
    "fit": stage_fit,
    "attack": stage_attack,
    "mindict": stage_mindict,
    "counts": stage_counts,
    "export": stage_export,
}


def _commit(outputs: List[Output], stdout: TextIO) -> None:
    staged: List[Tuple[str, str]] = []
    moved: List[str] = []
    try:
        for path, text in outputs:
            if path is None:
                continue
            target = Path(path)
            handle = tempfile.NamedTemporaryFile(
                "w", encoding="utf-8", newline="", dir=target.parent,
                prefix=f".{target.name}.", suffix=".tmp", delete=False,
            )
            staged.append((handle.name, path))
            with handle:
                handle.write(text)
        for temporary, path in staged:
            os.replace(temporary, path)
            moved.append(path)
    except BaseException:
        for temporary, _ in staged:
            if os.path.exists(temporary):
                os.remove(temporary)
        for path in moved:
            os.remove(path)
        raise
    for path, text in outputs:
        if path is None:
            stdout.write(text)


def run_pipeline(config: RunConfig, stdout: TextIO = None, stderr: TextIO = None) -> int:
    """Run one subcommand; returns the exit status (0 ok, 1 usage, 2 data, 3 resource guard)."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        config.validate()
        outputs = STAGES[config.command](config, stderr)
        _commit(outputs, stdout)
    except PasswordNetworkError as exc:
        stderr.write(f"error: {exc}\n")
        return exc.exit_code
    except Exception as exc:
        logger.exception(f"[run_pipeline] {config.command} failed")
        stderr.write(f"error: {exc}\n")
        return exit_code_for(exc)
    return EXIT_OK
