"""DOT, JSON and CSV forms of coloured graphs.

DOT::

    graph G {
      v_1_1 [colour=1, label="v_1_1"];
      v_1_1 -- v_2_1;
    }

JSON::

    {"cluster": [...], "vertices": [{"class": i, "ordinal": j}, ...],
     "edges": [["v_1_1", "v_2_1"], ...], "colouring": {"v_1_1": 1, ...}}
"""

from __future__ import annotations

import csv
import io
import json
import re

from .cluster import ColourCluster, ColouredGraph
from .errors import ChromaError
from .graph import Graph, VertexLabel

_ID = re.compile(r"^v_(\d+)_(\d+)$")
_NODE = re.compile(r"^(v_\d+_\d+)\s*\[(.*)\]\s*;?$")
_EDGE = re.compile(r"^(v_\d+_\d+)\s*--\s*(v_\d+_\d+)\s*;?$")
_ATTR = re.compile(r'(\w+)\s*=\s*("[^"]*"|[^,\s]+)')


def vertex_id(x: VertexLabel) -> str:
    return f"v_{x.class_index}_{x.ordinal}"


def parse_vertex_id(s: str) -> VertexLabel:
    m = _ID.match(s)
    if not m:
        raise ChromaError(f"bad vertex id {s!r}")
    return VertexLabel(int(m.group(1)), int(m.group(2)))


def to_dot(cg: ColouredGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for x in cg.graph.sorted_vertices():
        vid = vertex_id(x)
        lines.append(f'  {vid} [colour={cg.colouring[x]}, label="{vid}"];')
    for a, b in cg.graph.sorted_edges():
        lines.append(f"  {vertex_id(a)} -- {vertex_id(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def from_dot(text: str) -> ColouredGraph:
    """Read back the DOT written by :func:`to_dot` (one statement per line)."""
    colouring: dict[VertexLabel, int] = {}
    edges = []
    body = text.strip()
    if not body.startswith("graph") or not body.endswith("}"):
        raise ChromaError("not an undirected DOT graph")
    for raw in body.splitlines()[1:-1]:
        line = raw.strip()
        if not line:
            continue
        if m := _EDGE.match(line):
            edges.append((parse_vertex_id(m.group(1)), parse_vertex_id(m.group(2))))
        elif m := _NODE.match(line):
            attrs = dict(_ATTR.findall(m.group(2)))
            if "colour" not in attrs:
                raise ChromaError(f"vertex {m.group(1)} has no colour")
            colouring[parse_vertex_id(m.group(1))] = int(attrs["colour"])
        else:
            raise ChromaError(f"unrecognised DOT line: {line!r}")
    g = Graph.build(colouring, edges)
    return ColouredGraph.from_colouring(g, colouring)


def to_json_dict(cg: ColouredGraph) -> dict:
    vs = cg.graph.sorted_vertices()
    return {
        "cluster": list(cg.cluster.sizes),
        "vertices": [{"class": x.class_index, "ordinal": x.ordinal} for x in vs],
        "edges": [[vertex_id(a), vertex_id(b)] for a, b in cg.graph.sorted_edges()],
        "colouring": {vertex_id(x): cg.colouring[x] for x in vs},
    }


def from_json_dict(data: dict) -> ColouredGraph:
    try:
        vs = [VertexLabel(d["class"], d["ordinal"]) for d in data["vertices"]]
        edges = [(parse_vertex_id(a), parse_vertex_id(b)) for a, b in data["edges"]]
        colouring = {parse_vertex_id(k): int(c) for k, c in data["colouring"].items()}
        cluster = ColourCluster(tuple(data["cluster"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ChromaError(f"malformed graph JSON: {exc}") from None
    return ColouredGraph(Graph.build(vs, edges), colouring, cluster)


def to_json(cg: ColouredGraph) -> str:
    return json.dumps(to_json_dict(cg), indent=2) + "\n"


def from_json(text: str) -> ColouredGraph:
    return from_json_dict(json.loads(text))


EDGE_CSV_COLUMNS = ["u", "v", "colour_u", "colour_v"]


def to_csv(cg: ColouredGraph) -> str:
    """Edge list; isolated vertices appear as rows with an empty ``v``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(EDGE_CSV_COLUMNS)
    touched = set()
    for a, b in cg.graph.sorted_edges():
        w.writerow([vertex_id(a), vertex_id(b), cg.colouring[a], cg.colouring[b]])
        touched.update((a, b))
    for x in cg.graph.sorted_vertices():
        if x not in touched:
            w.writerow([vertex_id(x), "", cg.colouring[x], ""])
    return buf.getvalue()
