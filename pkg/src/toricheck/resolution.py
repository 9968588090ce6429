"""Combinatorial blow-up: subdivide every thick node until all labels are
unit coordinate vectors.

A non-loop edge of total exponent degree d > 1 becomes a chain of d edges
through d-1 fresh genus-0 vertices; the chain labels are grouped by
parameter in ascending index order (m_1 unit-1 edges, then m_2 unit-2
edges, ...).  A loop supported on a single parameter with exponent d > 1
becomes a cycle of d unit edges.  A loop with mixed support admits no
regular nodal model, so resolution refuses it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotDisciplinedError
from .graph import Edge, LabelledGraph, Vertex

__all__ = ["ResolutionOutput", "resolve"]


@dataclass(frozen=True)
class ResolutionOutput:
    graph: LabelledGraph
    edge_trace: dict   # new edge id -> (old edge id, 1-based position in chain)
    new_vertices: frozenset

    def trace_json_obj(self) -> dict:
        return {
            "edge_trace": {k: [v[0], v[1]] for k, v in sorted(self.edge_trace.items())},
            "new_vertices": sorted(self.new_vertices),
        }


def _unit(n: int, i: int) -> tuple:
    return tuple(1 if k == i else 0 for k in range(n))


def _label_sequence(label) -> list:
    """Unit labels of the subdivision chain, grouped by parameter index."""
    n = len(label)
    seq = []
    for i, m in enumerate(label):
        seq.extend([_unit(n, i)] * m)
    return seq


def resolve(graph: LabelledGraph) -> ResolutionOutput:
    n = graph.num_params
    vertices = list(graph.vertices)
    edges = []
    trace = {}
    fresh = set()

    # Refuse mixed-support loops up front, scanning in id order so the
    # reported edge matches the disciplined-criterion witness.
    for e in graph.sorted_edges():
        if e.is_loop() and sum(1 for m in e.label if m > 0) > 1:
            raise NotDisciplinedError(e.id)

    for e in graph.edges:
        degree = sum(e.label)
        if degree == 1:
            edges.append(e)
            trace[e.id] = (e.id, 1)
            continue
        seq = _label_sequence(e.label)
        chain_vertices = [f"{e.id}#{k}" for k in range(1, degree)]
        for vid in chain_vertices:
            vertices.append(Vertex(id=vid, genus=0))
            fresh.add(vid)
        stops = [e.tail] + chain_vertices + [e.head]
        for k in range(degree):
            eid = f"{e.id}.{k + 1}"
            edges.append(Edge(id=eid, tail=stops[k], head=stops[k + 1],
                              label=seq[k]))
            trace[eid] = (e.id, k + 1)

    out = LabelledGraph(num_params=n, vertices=tuple(vertices),
                        edges=tuple(edges))
    return ResolutionOutput(graph=out, edge_trace=trace,
                            new_vertices=frozenset(fresh))
