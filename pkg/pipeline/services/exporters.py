"""
Graph exporters.

gexf     networkx GEXF 1.2draft writer (the Gephi interchange format)
graphml  networkx GraphML writer
edgecsv  source,target,distance with RFC 4180 quoting
dot      Graphviz undirected graph

Nodes carry label (password, or node id with redact), frequency, degree and, when an
assignment is given, community. Edges carry distance and appear once, lower id first.
"""
import csv
import logging
import re
from typing import Optional, Sequence, TextIO

import networkx as nx

from general.display import node_label
from general.errors import ArgumentError
from netstats.models import CommunityAssignment
from pipeline import config
from simjoin.models import ThresholdView

logger = logging.getLogger(__name__)

# networkx stamps the current date into <meta>; drop it so exports are reproducible.
_GEXF_DATE = re.compile(r' lastmodifieddate="[^"]*"')


def _selected(view: ThresholdView, nodes: Optional[Sequence[int]]):
    if nodes is None:
        return list(range(view.node_count)), view.edges
    keep = set(nodes)
    return sorted(keep), [edge for edge in view.edges if edge[0] in keep and edge[1] in keep]


def _to_networkx(view: ThresholdView, assignment, redact: bool, nodes) -> nx.Graph:
    node_ids, edges = _selected(view, nodes)
    graph = nx.Graph()
    for v in node_ids:
        attributes = {
            "label": node_label(v, view.passwords[v], redact),
            "frequency": view.frequencies[v],
            "degree": len(view.adjacency[v]),
        }
        if assignment is not None:
            attributes["community"] = assignment.labels[v]
        graph.add_node(v, **attributes)
    for i, j, d in edges:
        graph.add_edge(i, j, distance=d)
    return graph


def _write_gexf(graph: nx.Graph, sink: TextIO):
    text = "\n".join(nx.generate_gexf(graph, version=config.GEXF_VERSION))
    sink.write(_GEXF_DATE.sub("", text) + "\n")


def _write_graphml(graph: nx.Graph, sink: TextIO):
    sink.write("\n".join(nx.generate_graphml(graph)) + "\n")


def _write_edgecsv(graph: nx.Graph, sink: TextIO):
    writer = csv.writer(sink)
    writer.writerow(["source", "target", "distance"])
    labels = graph.nodes
    for i, j, d in sorted((min(i, j), max(i, j), data["distance"]) for i, j, data in graph.edges(data=True)):
        writer.writerow([labels[i]["label"], labels[j]["label"], d])


def _dot_string(value: str) -> str:
    return '"' + value.replace('"', '\\"') + '"'


def _write_dot(graph: nx.Graph, sink: TextIO):
    sink.write("graph passwords {\n")
    for v, data in graph.nodes(data=True):
        attributes = [f"label={_dot_string(data['label'])}"]
        attributes += [f"{key}={value}" for key, value in data.items() if key != "label"]
        sink.write(f"  {v} [{', '.join(attributes)}];\n")
    for i, j, d in sorted((min(i, j), max(i, j), data["distance"]) for i, j, data in graph.edges(data=True)):
        sink.write(f"  {i} -- {j} [distance={d}];\n")
    sink.write("}\n")


WRITERS = {
    "gexf": _write_gexf,
    "graphml": _write_graphml,
    "edgecsv": _write_edgecsv,
    "dot": _write_dot,
}


def export_graph(
    view: ThresholdView,
    assignment: Optional[CommunityAssignment],
    export_format: str,
    sink: TextIO,
    redact: bool = False,
    nodes: Optional[Sequence[int]] = None,
) -> None:
    """Write the view (restricted to `nodes` when given) in `export_format` to a text sink."""
    if export_format not in WRITERS:
        raise ArgumentError(f"Unknown export format '{export_format}'. Available: {', '.join(config.EXPORT_FORMATS)}")
    graph = _to_networkx(view, assignment, redact, nodes)
    logger.info(f"[export_graph] {export_format}: {graph.number_of_nodes()} nodes, {graph.number_of_edges()} edges")
    WRITERS[export_format](graph, sink)
