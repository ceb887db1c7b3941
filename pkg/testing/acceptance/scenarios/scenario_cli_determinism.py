import io
import tempfile
from pathlib import Path

from corpus.services.parsing import write_counted
from pipeline.models import RunConfig
from pipeline.services.runner import run_pipeline
from testing.acceptance.base import check
from testing.synthetic.generators import zipf_corpus

RUNS = (
    {"command": "build", "export_format": "gexf"},
    {"command": "build", "export_format": "graphml"},
    {"command": "export", "export_format": "dot", "connected_only": True},
    {"command": "communities", "report_format": "json", "seed": 3},
    {"command": "fit", "threshold": 2},
    {"command": "attack", "report_format": "csv"},
    {"command": "mindict", "method": "partial", "ratio": 0.8, "report_format": "json"},
    {"command": "stats"},
)


def run():
    print("Running: scenario_cli_determinism")
    with tempfile.TemporaryDirectory() as tmp:
        corpus_path = Path(tmp) / "corpus.txt"
        with open(corpus_path, "wb") as handle:
            write_counted(zipf_corpus(3, 1500), handle)
        for options in RUNS:
            outputs = []
            for attempt in (1, 2):
                out = Path(tmp) / f"{options['command']}.{attempt}"
                config = RunConfig(input_path=str(corpus_path), input_format="counted", out=str(out), **options)
                status = run_pipeline(config, stdout=io.StringIO(), stderr=io.StringIO())
                check(status == 0, f"{options} exited with {status}")
                outputs.append(out.read_bytes())
            check(outputs[0] == outputs[1], f"{options} is not byte-identical across runs")
    print("✓ Passed")
