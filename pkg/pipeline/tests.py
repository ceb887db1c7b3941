import csv
import io
import json
import os
import re
import tempfile
from pathlib import Path
from unittest import TestCase
from unittest.mock import patch

import networkx as nx
from django.core.management import call_command
from django.core.management.base import CommandError

from attack.models import CrackingCurve, CurvePoint
from corpus.models import Corpus
from corpus.services.parsing import write_counted
from general.display import display_password
from general.errors import EXIT_DATA, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE
from pipeline.models import RunConfig
from pipeline.services.exporters import export_graph
from pipeline.services.reports import export_report
from pipeline.services.runner import run_pipeline
from simjoin.services.join import build_graph
from simjoin.services.views import threshold_view
from testing.synthetic.generators import random_corpus, zipf_corpus


class PipelineTestCase(TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def corpus_file(self, corpus: Corpus, name="corpus.txt") -> str:
        path = self.dir / name
        with open(path, "wb") as handle:
            write_counted(corpus, handle)
        return str(path)

    def plain_file(self, lines, name="plain.txt") -> str:
        path = self.dir / name
        path.write_bytes(b"".join(line + b"\n" for line in lines))
        return str(path)

    def run_command(self, name, **options):
        out, err = io.StringIO(), io.StringIO()
        call_command(name, stdout=out, stderr=err, **options)
        return out.getvalue(), err.getvalue()


class CountsCommandTests(PipelineTestCase):
    def test_radius_one(self):
        out, _ = self.run_command("counts", length=8, alphabet=95, radius=1)
        self.assertIn("analytic_count=1615\n", out)
        self.assertIn("termwise_count=1615\n", out)

    def test_small_radius_two_reports_all_counts(self):
        out, _ = self.run_command("counts", length=2, alphabet=3, radius=2)
        record = dict(line.split("=", 1) for line in out.strip().splitlines())
        self.assertTrue(record["exact_distinct_count"])
        self.assertIn("analytic_count", record)

    def test_unsupported_radius(self):
        with self.assertRaises(CommandError) as ctx:
            self.run_command("counts", length=4, alphabet=10, radius=3)
        self.assertEqual(ctx.exception.returncode, EXIT_USAGE)


class BuildCommandTests(PipelineTestCase):
    def setUp(self):
        super().setUp()
        self.corpus = Corpus.from_counts({b"password": 5, b"password1": 3, b"passw0rd": 2})
        self.input = self.corpus_file(self.corpus)

    def test_gexf(self):
        target = self.dir / "graph.gexf"
        self.run_command("build", input=self.input, format="counted", threshold=3, out=str(target))
        graph = nx.read_gexf(target)
        self.assertEqual(graph.number_of_nodes(), 3)
        self.assertEqual(graph.number_of_edges(), len(build_graph(self.corpus, 3, "naive").edges))
        labels = {data["label"] for _, data in graph.nodes(data=True)}
        self.assertEqual(labels, {"password", "password1", "passw0rd"})

    def test_graphml_round_trip(self):
        target = self.dir / "graph.graphml"
        self.run_command("build", input=self.input, format="counted", threshold=1, export="graphml", out=str(target))
        graph = nx.read_graphml(target)
        edges = {tuple(sorted((int(u), int(v)))) + (d["distance"],) for u, v, d in graph.edges(data=True)}
        self.assertEqual(edges, set(build_graph(self.corpus, 1, "naive").edges))

    def test_redact(self):
        target = self.dir / "graph.gexf"
        self.run_command("build", input=self.input, format="counted", redact=True, out=str(target))
        labels = {data["label"] for _, data in nx.read_gexf(target).nodes(data=True)}
        self.assertEqual(labels, {"0", "1", "2"})
        self.assertNotIn(b"password", target.read_bytes())

    def test_deterministic(self):
        first, second = self.dir / "a.gexf", self.dir / "b.gexf"
        for target in (first, second):
            self.run_command("build", input=self.input, format="counted", out=str(target))
        self.assertEqual(first.read_bytes(), second.read_bytes())

    def test_missing_input_is_data_error(self):
        with self.assertRaises(CommandError) as ctx:
            self.run_command("build", input=str(self.dir / "missing.txt"))
        self.assertEqual(ctx.exception.returncode, EXIT_DATA)

    def test_zero_threshold_is_usage_error(self):
        with self.assertRaises(CommandError) as ctx:
            self.run_command("build", input=self.input, threshold=0)
        self.assertEqual(ctx.exception.returncode, EXIT_USAGE)


class ExportFormatTests(PipelineTestCase):
    def test_edgecsv_quotes_commas(self):
        corpus = Corpus.from_counts({b"a,b": 2, b"a,c": 1, b'q"x': 1})
        view = threshold_view(build_graph(corpus, 1), 1)
        sink = io.StringIO(newline="")
        export_graph(view, None, "edgecsv", sink)
        text = sink.getvalue()
        self.assertIn('"a,b","a,c",1', text)
        rows = list(csv.reader(io.StringIO(text)))
        self.assertEqual(rows[0], ["source", "target", "distance"])
        self.assertEqual(rows[1:], [["a,b", "a,c", "1"]])

    def test_edgecsv_round_trip(self):
        corpus = random_corpus(3, 120, max_len=5)
        view = threshold_view(build_graph(corpus, 2), 2)
        sink = io.StringIO(newline="")
        export_graph(view, None, "edgecsv", sink, redact=True)
        rows = list(csv.reader(io.StringIO(sink.getvalue())))[1:]
        self.assertEqual(sorted((int(a), int(b), int(d)) for a, b, d in rows), list(view.edges))

    def test_gexf_counts(self):
        corpus = Corpus.from_counts({b"abc": 1, b"abd": 1})
        sink = io.StringIO()
        export_graph(threshold_view(build_graph(corpus, 1), 1), None, "gexf", sink)
        text = sink.getvalue()
        self.assertEqual(text.count("<node "), 2)
        self.assertEqual(text.count("<edge "), 1)
        self.assertNotIn("lastmodifieddate", text)

    def test_dot(self):
        corpus = Corpus.from_counts({b'say "hi"': 2, b'say "ho"': 1})
        sink = io.StringIO()
        export_graph(threshold_view(build_graph(corpus, 1), 1), None, "dot", sink)
        text = sink.getvalue()
        self.assertTrue(text.startswith("graph passwords {\n"))
        self.assertIn('label="say \\"hi\\""', text)
        self.assertIn("  0 -- 1 [distance=1];\n", text)

    def test_node_subset(self):
        corpus = Corpus.from_counts({b"abc": 3, b"abd": 2, b"zzzzzz": 1})
        view = threshold_view(build_graph(corpus, 1), 1)
        sink = io.StringIO()
        export_graph(view, None, "dot", sink, nodes=view.without_isolated())
        self.assertNotIn("zzzzzz", sink.getvalue())


DOT_NODE = re.compile(r'^  (\d+) \[label="((?:\\"|\\(?!")|[^"\\])*)"(?:, \w+=\d+)*\];$')
DOT_EDGE = re.compile(r"^  (\d+) -- (\d+) \[distance=(\d+)\];$")


class ExportReadBackTests(TestCase):
    """Awkward labels must not break any format's syntax."""

    def setUp(self):
        corpus = Corpus.from_counts(
            {b"pass\\": 3, b"pass": 2, b"a\xef\xbf\xbe": 1, b"a": 1, b'q"\\': 1, b"q": 1}
        )
        self.view = threshold_view(build_graph(corpus, 3), 3)
        self.labels = {display_password(p): v for v, p in enumerate(self.view.passwords)}
        self.edges = sorted((i, j) for i, j, _ in self.view.edges)

    def export(self, export_format):
        sink = io.StringIO(newline="")
        export_graph(self.view, None, export_format, sink)
        return sink.getvalue()

    def assert_networkx_round_trip(self, graph):
        self.assertEqual(
            sorted(tuple(sorted((int(u), int(v)))) for u, v in graph.edges()), self.edges
        )
        self.assertEqual({data["label"]: int(v) for v, data in graph.nodes(data=True)}, self.labels)

    def test_gexf(self):
        graph = nx.read_gexf(io.BytesIO(self.export("gexf").encode("utf-8")))
        self.assert_networkx_round_trip(graph)
        self.assertIn("a\\ufffe", self.labels)

    def test_graphml(self):
        self.assert_networkx_round_trip(nx.read_graphml(io.BytesIO(self.export("graphml").encode("utf-8"))))

    def test_edgecsv(self):
        rows = list(csv.reader(io.StringIO(self.export("edgecsv"))))[1:]
        pairs = sorted(tuple(sorted((self.labels[a], self.labels[b]))) for a, b, _ in rows)
        self.assertEqual(pairs, self.edges)

    def test_dot(self):
        lines = self.export("dot").splitlines()
        self.assertEqual((lines[0], lines[-1]), ("graph passwords {", "}"))
        labels, edges = {}, []
        for line in lines[1:-1]:
            node, edge = DOT_NODE.match(line), DOT_EDGE.match(line)
            self.assertTrue(node or edge, line)
            if node:
                labels[node.group(2).replace('\\"', '"')] = int(node.group(1))
            else:
                edges.append((int(edge.group(1)), int(edge.group(2))))
        self.assertEqual(labels, self.labels)
        self.assertEqual(sorted(edges), self.edges)
        self.assertIn('label="pass\\x5c"', self.export("dot"))


class ExportCommandTests(PipelineTestCase):
    def test_communities_and_connected_only(self):
        corpus = Corpus.from_counts({b"abc": 3, b"abd": 2, b"lonely-one": 1})
        target = self.dir / "graph.gexf"
        self.run_command(
            "export", input=self.corpus_file(corpus), format="counted", threshold=1,
            connected_only=True, out=str(target),
        )
        graph = nx.read_gexf(target)
        self.assertEqual(graph.number_of_nodes(), 2)
        self.assertEqual({data["community"] for _, data in graph.nodes(data=True)}, {0})


class ReportTests(TestCase):
    def curve(self, points):
        return CrackingCurve(tuple(CurvePoint(s, g, g / 10) for s, g in points), "frequency", 10)

    def test_curve_csv(self):
        sink = io.StringIO(newline="")
        export_report(self.curve([(1, 8), (2, 10), (3, 10)]), "csv", sink)
        lines = sink.getvalue().splitlines()
        self.assertEqual(lines, ["size,gmax,ratio", "1,8,0.8", "2,10,1", "3,10,1"])

    def test_empty_curve(self):
        sink = io.StringIO(newline="")
        export_report(self.curve([]), "csv", sink)
        self.assertEqual(sink.getvalue().splitlines(), ["size,gmax,ratio"])

    def test_json_round_trip(self):
        curve = CrackingCurve((CurvePoint(1, 1, 1 / 3), CurvePoint(2, 3, 1.0)), "degree", 3)
        sink = io.StringIO()
        export_report(curve, "json", sink)
        self.assertEqual(
            json.loads(sink.getvalue()),
            {"degree": [{"size": 1, "gmax": 1, "ratio": 0.333333}, {"size": 2, "gmax": 3, "ratio": 1.0}]},
        )


class AnalysisCommandTests(PipelineTestCase):
    def setUp(self):
        super().setUp()
        self.corpus = zipf_corpus(5, 300)
        self.input = self.corpus_file(self.corpus)

    def test_attack_side_by_side(self):
        out, err = self.run_command("attack", input=self.input, format="counted", threshold=2)
        rows = list(csv.reader(io.StringIO(out)))
        self.assertEqual(
            rows[0],
            ["size", "gmax_frequency", "ratio_frequency", "gmax_degree", "ratio_degree",
             "gmax_neighborhood_weight", "ratio_neighborhood_weight"],
        )
        self.assertEqual(len(rows), 301)
        self.assertEqual(rows[-1][2::2], ["1", "1", "1"])
        self.assertIn("[attack]", err)

    def test_attack_json(self):
        out, _ = self.run_command("attack", input=self.input, format="counted", threshold=1, top=50, report="json")
        payload = json.loads(out)
        self.assertEqual(list(payload), ["frequency", "degree", "neighborhood_weight"])
        self.assertEqual(len(payload["degree"]), 50)

    def test_attack_deterministic(self):
        first, second = self.dir / "a.csv", self.dir / "b.csv"
        for target in (first, second):
            self.run_command("attack", input=self.input, format="counted", out=str(target))
        self.assertEqual(first.read_bytes(), second.read_bytes())

    def test_communities(self):
        out, _ = self.run_command("communities", input=self.input, format="counted", threshold=1, report="json", seed=4)
        payload = json.loads(out)
        self.assertEqual(len(payload["nodes"]), 300)
        self.assertEqual(sum(payload["sizes"]), 300)
        self.assertEqual(payload["seed"], 4)

    def test_fit_with_rank_table(self):
        fit_path, rank_path = self.dir / "fit.json", self.dir / "rank.csv"
        self.run_command(
            "fit", input=self.input, format="counted", threshold=2,
            report="json", out=str(fit_path), rank_out=str(rank_path),
        )
        fit = json.loads(fit_path.read_text())
        self.assertGreater(fit["exponent"], 1)
        self.assertEqual(len(rank_path.read_text().splitlines()), 301)

    def test_mindict_greedy(self):
        out, _ = self.run_command("mindict", input=self.input, format="counted", threshold=2, report="json")
        payload = json.loads(out)
        self.assertTrue(payload["is_dominating"])
        self.assertEqual(payload["coverage_ratio"], 1.0)
        self.assertEqual(len(payload["nodes"]), payload["size"])

    def test_mindict_partial(self):
        out, _ = self.run_command("mindict", input=self.input, format="counted", method="partial", ratio=0.5, report="json")
        self.assertGreaterEqual(json.loads(out)["coverage_ratio"], 0.5)

    def test_mindict_exact_budget(self):
        with self.assertRaises(CommandError) as ctx:
            self.run_command("mindict", input=self.input, format="counted", method="exact", top=25)
        self.assertEqual(ctx.exception.returncode, EXIT_RESOURCE)

    def test_stats(self):
        out, _ = self.run_command("stats", input=self.input, format="counted", top=3)
        rows = list(csv.reader(io.StringIO(out)))
        self.assertIn(["summary", "unique_count", "300"], rows)
        self.assertEqual(len([row for row in rows if row[0] == "top"]), 3)


class RunPipelineTests(PipelineTestCase):
    def test_failed_stage_leaves_no_outputs(self):
        corpus_path = self.corpus_file(zipf_corpus(2, 200))
        fit_path, rank_path = self.dir / "fit.csv", self.dir / "rank.csv"
        config = RunConfig(
            command="fit", input_path=corpus_path, input_format="counted", threshold=2,
            out=str(fit_path), rank_out=str(rank_path),
        )
        real_replace = os.replace
        calls = []

        def replace_then_fail(src, dst):
            calls.append(dst)
            if len(calls) == 2:
                raise OSError("disk full")
            real_replace(src, dst)

        stderr = io.StringIO()
        with patch("pipeline.services.runner.os.replace", side_effect=replace_then_fail):
            status = run_pipeline(config, stdout=io.StringIO(), stderr=stderr)
        self.assertEqual(status, EXIT_DATA)
        self.assertEqual(sorted(os.listdir(self.dir)), ["corpus.txt"])
        self.assertIn("disk full", stderr.getvalue())

    def test_unknown_command(self):
        self.assertEqual(run_pipeline(RunConfig(command="plot"), io.StringIO(), io.StringIO()), EXIT_USAGE)

    def test_view_above_threshold(self):
        config = RunConfig(command="build", input_path=self.plain_file([b"a", b"b"]), threshold=1, view=2)
        self.assertEqual(run_pipeline(config, io.StringIO(), io.StringIO()), EXIT_USAGE)

    def test_stdout_output(self):
        stdout = io.StringIO()
        config = RunConfig(command="build", input_path=self.plain_file([b"abc", b"abd"]), threshold=1, export_format="edgecsv")
        self.assertEqual(run_pipeline(config, stdout, io.StringIO()), EXIT_OK)
        self.assertEqual(stdout.getvalue(), "source,target,distance\r\nabc,abd,1\r\n")
