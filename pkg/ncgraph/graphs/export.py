"""
Graph export to DOT, edge-list CSV and a JSON graph document.

DOT output is rendered from templates/graph.dot.j2. Vertices are emitted in
index order with their element labels; edges in ascending (u, v) order, so
identical graphs always produce identical files.
"""
import csv
import io
import json
import logging
from pathlib import Path
from typing import Union

from jinja2 import Environment, FileSystemLoader

from ncgraph.graphs.core import SimpleGraph

logger = logging.getLogger(__name__)

TEMPLATE_DIR = Path(__file__).resolve().parent.parent / "templates"

_environment = Environment(
    loader=FileSystemLoader(str(TEMPLATE_DIR)),
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(graph: SimpleGraph, name: str = "G", title: str = "") -> str:
    """
    Render a graph as an undirected DOT document.

    Args:
        graph: Graph to render
        name: DOT graph name
        title: Graph label (defaults to the name)
    """
    template = _environment.get_template("graph.dot.j2")
    vertices = [(v, _dot_escape(graph.label(v))) for v in range(graph.vertex_count)]
    return template.render(
        name=_dot_escape(name),
        title=_dot_escape(title or name),
        vertices=vertices,
        edges=list(graph.edges()),
    )


def to_csv(graph: SimpleGraph) -> str:
    """
    Render the edge list as CSV with header "u,v", one edge per line.

    Endpoints are written as vertex labels (element labels for group
    graphs), in ascending vertex order with u < v.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["u", "v"])
    writer.writerows((graph.label(u), graph.label(v)) for u, v in graph.edges())
    return buffer.getvalue()


def to_json(graph: SimpleGraph, name: str = "G") -> str:
    """
    Render the graph as a JSON document with labelled vertices and edges.

    Example:
        >>> print(to_json(SimpleGraph.empty(0), name="ncg"))
        {
          "name": "ncg",
          "vertex_count": 0,
          "vertices": [],
          "edges": []
        }
    """
    document = {
        "name": name,
        "vertex_count": graph.vertex_count,
        "vertices": [graph.label(v) for v in range(graph.vertex_count)],
        "edges": [[graph.label(u), graph.label(v)] for u, v in graph.edges()],
    }
    return json.dumps(document, indent=2) + "\n"


def write_graph(graph: SimpleGraph, path: Union[str, Path], fmt: str, name: str = "G") -> None:
    """Write a graph to path as "dot", "csv" or "json"."""
    if fmt == "dot":
        text = to_dot(graph, name=name)
    elif fmt == "json":
        text = to_json(graph, name=name)
    elif fmt == "csv":
        text = to_csv(graph)
    else:
        raise ValueError(f"unsupported graph format {fmt!r} (expected dot, csv or json)")
    Path(path).write_text(text)
    logger.info(f"Wrote {fmt} graph with {graph.vertex_count} vertices to {path}")
