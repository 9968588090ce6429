"""Labelled multigraph model: dual graphs of nodal curves with thickness labels.

A graph lives over ``num_params`` base parameters t_1..t_n.  Every edge carries
an exponent vector (m_1, ..., m_n) recording the thickness t_1^{m_1}...t_n^{m_n}
of the corresponding node; at least one exponent must be positive.  Vertices
carry the geometric genus of their component.

All values are immutable after construction and every operation here is a pure
function, so everything is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import GraphValidationError, InvalidParameterError
from .intlin import IntMatrix

# Exponent vectors are plain tuples of non-negative ints.
ExponentVector = tuple

__all__ = [
    "ExponentVector",
    "Vertex",
    "Edge",
    "LabelledGraph",
    "ContractionResult",
    "validate",
    "require_valid",
    "betti_one",
    "arithmetic_genus",
    "contract",
    "incidence_matrix",
    "cycle_space_basis",
]


@dataclass(frozen=True)
class Vertex:
    id: str
    genus: int = 0


@dataclass(frozen=True)
class Edge:
    """Oriented edge: the stored (tail, head) order fixes the orientation
    used by incidence matrices and cycle vectors.  tail == head is a loop."""

    id: str
    tail: str
    head: str
    label: tuple

    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True)
class LabelledGraph:
    num_params: int
    vertices: tuple
    edges: tuple

    def sorted_vertices(self) -> list:
        return sorted(self.vertices, key=lambda v: v.id)

    def sorted_edges(self) -> list:
        return sorted(self.edges, key=lambda e: e.id)

    def vertex_ids(self) -> set:
        return {v.id for v in self.vertices}

    def edge(self, edge_id: str) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise KeyError(edge_id)


@dataclass(frozen=True)
class ContractionResult:
    """Result of contracting away all parameters outside a subset I.

    The new graph lives over the restricted parameters, re-indexed 1..|I|.
    ``vertex_map`` sends every old vertex id to the id of its image;
    ``surviving_edges`` maps each new edge id to the old edge id it came from
    (edge ids are preserved, so this is the identity on its domain).
    """

    graph: LabelledGraph
    vertex_map: dict = field(compare=False)
    surviving_edges: dict = field(compare=False)


def _adjacency(graph: LabelledGraph) -> dict:
    """vertex id -> list of (edge, other endpoint), edges in id order.

    Loops appear once.  Non-loop edges appear at both endpoints.
    """
    adj = {v.id: [] for v in graph.vertices}
    for e in graph.sorted_edges():
        if e.is_loop():
            adj[e.tail].append((e, e.head))
        else:
            adj[e.tail].append((e, e.head))
            adj[e.head].append((e, e.tail))
    return adj


def _is_connected(graph: LabelledGraph) -> bool:
    if not graph.vertices:
        return False
    adj = _adjacency(graph)
    start = min(adj)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for _, w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(graph.vertices)


def validate(graph: LabelledGraph) -> list:
    """Return the list of invariant violations (empty means the graph is ok)."""
    violations = []
    if graph.num_params < 1:
        violations.append("num_params must be >= 1")
    ids = [v.id for v in graph.vertices]
    if len(ids) != len(set(ids)):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        violations.append(f"duplicate vertex ids: {dupes}")
    if not graph.vertices:
        violations.append("graph has no vertices")
    for v in graph.vertices:
        if v.genus < 0:
            violations.append(f"vertex {v.id!r} has negative genus")
    eids = [e.id for e in graph.edges]
    if len(eids) != len(set(eids)):
        dupes = sorted({i for i in eids if eids.count(i) > 1})
        violations.append(f"duplicate edge ids: {dupes}")
    vset = set(ids)
    for e in graph.edges:
        if e.tail not in vset or e.head not in vset:
            violations.append(f"edge {e.id!r} has an endpoint outside the vertex set")
        if len(e.label) != graph.num_params:
            violations.append(f"edge {e.id!r} label has length {len(e.label)}, "
                              f"expected {graph.num_params}")
        elif any(m < 0 for m in e.label):
            violations.append(f"edge {e.id!r} has a negative exponent")
        elif all(m == 0 for m in e.label):
            violations.append(f"edge {e.id!r} has zero label")
    endpoints_ok = all(e.tail in vset and e.head in vset for e in graph.edges)
    if graph.vertices and endpoints_ok and not _is_connected(graph):
        violations.append("disconnected")
    return violations


def require_valid(graph: LabelledGraph) -> None:
    violations = validate(graph)
    if violations:
        raise GraphValidationError(violations)


def betti_one(graph: LabelledGraph) -> int:
    """First Betti number |E| - |V| + 1 of a connected graph."""
    return len(graph.edges) - len(graph.vertices) + 1


def arithmetic_genus(graph: LabelledGraph) -> int:
    """Sum of vertex genera plus the first Betti number."""
    return sum(v.genus for v in graph.vertices) + betti_one(graph)


def _check_params(graph: LabelledGraph, params: Iterable[int]) -> list:
    idx = sorted(set(params))
    if not idx:
        raise InvalidParameterError("parameter subset must be nonempty")
    for i in idx:
        if not 1 <= i <= graph.num_params:
            raise InvalidParameterError(
                f"parameter index {i} outside 1..{graph.num_params}")
    return idx


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def contract(graph: LabelledGraph, params: Iterable[int]) -> ContractionResult:
    """Contract every edge whose label omits all parameters in ``params``.

    Contracted non-loop edges merge their endpoints; contracted loops are
    deleted.  The genus of a merged vertex is the sum of the merged genera
    plus the first Betti number of the contracted subgraph on the class, so
    the arithmetic genus of the whole graph is preserved.  Labels of
    surviving edges are restricted to the kept coordinates, in ascending
    parameter order.
    """
    idx = _check_params(graph, params)
    pos = [i - 1 for i in idx]

    contracted = []
    surviving = []
    for e in graph.edges:
        if all(e.label[p] == 0 for p in pos):
            contracted.append(e)
        else:
            surviving.append(e)

    uf = _UnionFind([v.id for v in graph.vertices])
    for e in contracted:
        uf.union(e.tail, e.head)

    classes = {}
    for v in graph.vertices:
        classes.setdefault(uf.find(v.id), []).append(v)

    # The class representative is the lexicographically smallest member id,
    # which _UnionFind.union already arranges.
    vertex_map = {v.id: uf.find(v.id) for v in graph.vertices}

    new_vertices = []
    edges_in_class = {root: 0 for root in classes}
    for e in contracted:
        edges_in_class[uf.find(e.tail)] += 1
    for v in graph.vertices:
        root = uf.find(v.id)
        if root == v.id:
            members = classes[root]
            h1 = edges_in_class[root] - len(members) + 1
            genus = sum(m.genus for m in members) + h1
            new_vertices.append(Vertex(id=root, genus=genus))

    new_edges = []
    for e in surviving:
        new_edges.append(Edge(
            id=e.id,
            tail=vertex_map[e.tail],
            head=vertex_map[e.head],
            label=tuple(e.label[p] for p in pos),
        ))

    result = LabelledGraph(
        num_params=len(idx),
        vertices=tuple(new_vertices),
        edges=tuple(new_edges),
    )
    return ContractionResult(
        graph=result,
        vertex_map=vertex_map,
        surviving_edges={e.id: e.id for e in surviving},
    )


def incidence_matrix(graph: LabelledGraph) -> IntMatrix:
    """|V| x |E| matrix: +1 at the head, -1 at the tail of each edge column.

    Rows follow vertices in id order, columns follow edges in id order.
    Loop columns are zero.
    """
    verts = graph.sorted_vertices()
    edges = graph.sorted_edges()
    row_of = {v.id: i for i, v in enumerate(verts)}
    rows = [[0] * len(edges) for _ in verts]
    for j, e in enumerate(edges):
        if not e.is_loop():
            rows[row_of[e.head]][j] += 1
            rows[row_of[e.tail]][j] -= 1
    return IntMatrix.from_rows(len(verts), len(edges), rows)


def _dfs_tree(graph: LabelledGraph):
    """Depth-first spanning tree from the smallest vertex id, exploring
    incident edges in id order.

    Returns (tree edge ids, parent) where parent maps each non-root vertex
    to (parent vertex, tree edge, +1 if traversed tail->head else -1).
    """
    adj = _adjacency(graph)
    root = min(adj)
    parent = {}
    visited = {root}
    tree = set()
    # Explicit stack of (vertex, adjacency iterator) frames: true depth-first
    # order without recursion limits.
    stack = [(root, iter(adj[root]))]
    while stack:
        v, it = stack[-1]
        for e, w in it:
            if e.is_loop() or w in visited:
                continue
            visited.add(w)
            sign = 1 if (e.tail == v and e.head == w) else -1
            parent[w] = (v, e, sign)
            tree.add(e.id)
            stack.append((w, iter(adj[w])))
            break
        else:
            stack.pop()
    return tree, parent, root


def _tree_path_coeffs(parent, start, end):
    """Edge coefficients of the unique tree path from ``start`` to ``end``.

    parent stores, for each non-root vertex, the traversal sign of the
    parent->child step (+1 when it follows the stored tail->head
    orientation), so upward steps contribute -sign and downward steps +sign.
    """
    def root_chain(v):
        out = [v]
        while v in parent:
            v = parent[v][0]
            out.append(v)
        return out

    on_end_chain = set(root_chain(end))
    coeffs = {}
    v = start
    while v not in on_end_chain:
        p, e, sign = parent[v]
        coeffs[e.id] = coeffs.get(e.id, 0) - sign
        v = p
    meet = v
    descent = []
    u = end
    while u != meet:
        p, e, sign = parent[u]
        descent.append((e, sign))
        u = p
    for e, sign in reversed(descent):
        coeffs[e.id] = coeffs.get(e.id, 0) + sign
    return coeffs


def cycle_space_basis(graph: LabelledGraph) -> list:
    """Fundamental-cycle basis of the integer cycle lattice.

    Deterministic: the spanning tree is found by depth-first search from the
    smallest vertex id with edges explored in id order; each non-tree edge
    (in id order) contributes one basis vector with coefficient +1 on itself.
    Vectors are indexed by edges in id order.
    """
    edges = graph.sorted_edges()
    if not edges:
        return []
    tree, parent, _root = _dfs_tree(graph)
    col_of = {e.id: j for j, e in enumerate(edges)}
    basis = []
    for e in edges:
        if e.id in tree:
            continue
        vec = [0] * len(edges)
        vec[col_of[e.id]] = 1
        if not e.is_loop():
            for eid, c in _tree_path_coeffs(parent, e.head, e.tail).items():
                vec[col_of[eid]] += c
        basis.append(tuple(vec))
    return basis
