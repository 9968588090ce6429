"""Reading and writing the graph description format (UTF-8 JSON).

Schema: {"num_params": int >= 1,
         "vertices": [{"id": str, "genus": int >= 0 (optional, default 0)}],
         "edges": [{"id": str, "ends": [tail, head], "label": [int, ...]}]}
Unknown keys are rejected.  Serialization is byte-stable: sorted keys,
two-space indent, trailing newline.
"""

from __future__ import annotations

import json

from .errors import GraphFormatError
from .graph import Edge, LabelledGraph, Vertex

__all__ = ["parse_graph", "parse_graph_obj", "graph_json_obj", "dumps_graph",
           "dumps_json"]


def parse_graph(text: str) -> LabelledGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    return parse_graph_obj(obj)


def _require_keys(obj: dict, where: str, required, optional=()):
    if not isinstance(obj, dict):
        raise GraphFormatError(f"{where} must be an object")
    unknown = set(obj) - set(required) - set(optional)
    if unknown:
        raise GraphFormatError(f"{where} has unknown keys: {sorted(unknown)}")
    missing = set(required) - set(obj)
    if missing:
        raise GraphFormatError(f"{where} is missing keys: {sorted(missing)}")


def parse_graph_obj(obj) -> LabelledGraph:
    _require_keys(obj, "graph", ("num_params", "vertices", "edges"))
    num_params = obj["num_params"]
    if not isinstance(num_params, int) or isinstance(num_params, bool) \
            or num_params < 1:
        raise GraphFormatError("num_params must be an integer >= 1")
    if not isinstance(obj["vertices"], list) or not isinstance(obj["edges"], list):
        raise GraphFormatError("vertices and edges must be arrays")

    vertices = []
    for k, v in enumerate(obj["vertices"]):
        _require_keys(v, f"vertex #{k}", ("id",), ("genus",))
        vid = v["id"]
        genus = v.get("genus", 0)
        if not isinstance(vid, str):
            raise GraphFormatError(f"vertex #{k} id must be a string")
        if not isinstance(genus, int) or isinstance(genus, bool) or genus < 0:
            raise GraphFormatError(f"vertex {vid!r} genus must be an integer >= 0")
        vertices.append(Vertex(id=vid, genus=genus))

    edges = []
    for k, e in enumerate(obj["edges"]):
        _require_keys(e, f"edge #{k}", ("id", "ends", "label"))
        eid = e["id"]
        if not isinstance(eid, str):
            raise GraphFormatError(f"edge #{k} id must be a string")
        ends = e["ends"]
        if (not isinstance(ends, list) or len(ends) != 2
                or not all(isinstance(x, str) for x in ends)):
            raise GraphFormatError(f"edge {eid!r} ends must be [tail, head] strings")
        label = e["label"]
        if (not isinstance(label, list)
                or not all(isinstance(m, int) and not isinstance(m, bool)
                           and m >= 0 for m in label)):
            raise GraphFormatError(
                f"edge {eid!r} label must be an array of integers >= 0")
        edges.append(Edge(id=eid, tail=ends[0], head=ends[1],
                          label=tuple(label)))

    return LabelledGraph(num_params=num_params, vertices=tuple(vertices),
                         edges=tuple(edges))


def graph_json_obj(graph: LabelledGraph) -> dict:
    return {
        "num_params": graph.num_params,
        "vertices": [{"id": v.id, "genus": v.genus} for v in graph.vertices],
        "edges": [{"id": e.id, "ends": [e.tail, e.head],
                   "label": list(e.label)} for e in graph.edges],
    }


def dumps_json(obj) -> str:
    """Byte-stable JSON used for every report the package emits."""
    return json.dumps(obj, sort_keys=True, indent=2,
                      separators=(",", ": ")) + "\n"


def dumps_graph(graph: LabelledGraph) -> str:
    return dumps_json(graph_json_obj(graph))
