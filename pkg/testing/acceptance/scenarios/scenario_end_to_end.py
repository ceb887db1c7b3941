import io
import tempfile
from pathlib import Path

import networkx as nx
from django.core.management import call_command

from corpus.services.parsing import write_counted
from corpus.services.stats import top_n
from pipeline.models import RunConfig
from pipeline.services.runner import run_pipeline
from simjoin.services.join import build_graph
from testing.acceptance.base import check, time_limit
from testing.synthetic.generators import zipf_corpus


def _write(corpus, path):
    with open(path, "wb") as handle:
        write_counted(corpus, handle)
    return str(path)


def run():
    print("Running: scenario_end_to_end")
    corpus = zipf_corpus(10, 10_000, exponent=1.0)
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        gexf_path = tmp / "graph.gexf"
        config = RunConfig(
            command="build", input_path=_write(corpus, tmp / "corpus.txt"), input_format="counted",
            threshold=3, strategy="bucketed", out=str(gexf_path),
        )
        with time_limit("build --threshold 3 over 10,000 passwords", 120):
            status = run_pipeline(config, stdout=io.StringIO(), stderr=io.StringIO())
        check(status == 0, f"build exited with {status}")
        graph = nx.read_gexf(gexf_path)
        check(graph.number_of_nodes() == 10_000, f"GEXF has {graph.number_of_nodes()} nodes")

        subsample = top_n(corpus, 1000)
        sub_path = tmp / "subsample.gexf"
        call_command(
            "build", input=_write(subsample, tmp / "subsample.txt"), format="counted",
            threshold=3, strategy="bucketed", out=str(sub_path),
            stdout=io.StringIO(), stderr=io.StringIO(),
        )
        exported = nx.read_gexf(sub_path).number_of_edges()
        naive = len(build_graph(subsample, 3, "naive").edges)
        check(exported == naive, f"exported GEXF has {exported} edges, naive join has {naive}")
    print("✓ Passed")
