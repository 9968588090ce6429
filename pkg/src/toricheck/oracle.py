"""Brute-force reference implementations and a reproducible instance
generator for property testing.

The generator runs on SplitMix64 (Steele, Lea & Flood's 64-bit linear
generator with the fixed gamma 0x9E3779B97F4A7C15), so a seed reproduces the
same corpus in any implementation of the same algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeLimitError, ToricheckError
from .criteria import labels_parallel
from .graph import Edge, LabelledGraph, Vertex, require_valid

__all__ = [
    "GeneratorConfig",
    "SplitMix64",
    "enumerate_cycles",
    "aligned_bruteforce",
    "random_labelled_graph",
]

CYCLE_EDGE_CAP = 14

_MASK = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 pseudo-random generator (64-bit state, fixed increment)."""

    GAMMA = 0x9E3779B97F4A7C15

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + self.GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection sampling."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        threshold = ((1 << 64) // bound) * bound
        while True:
            x = self.next_u64()
            if x < threshold:
                return x % bound


@dataclass(frozen=True)
class GeneratorConfig:
    num_vertices: int
    num_edges: int
    num_params: int
    max_exponent: int
    seed: int
    class_constraint: str = "any"

    CLASSES = ("any", "regular", "disciplined", "single_param")

    def check(self) -> None:
        if self.num_vertices < 1 or self.num_params < 1 or self.max_exponent < 1:
            raise ToricheckError("generator sizes must be positive")
        if self.num_edges < self.num_vertices - 1:
            raise ToricheckError("too few edges for a connected graph")
        if self.class_constraint not in self.CLASSES:
            raise ToricheckError(
                f"unknown class constraint {self.class_constraint!r}")


def enumerate_cycles(graph: LabelledGraph) -> list:
    """Every simple cycle once, as a frozenset of edge ids; includes loops
    and two-cycles of parallel edges.  Sorted by (length, ids)."""
    edges = graph.sorted_edges()
    if len(edges) > CYCLE_EDGE_CAP:
        raise SizeLimitError(
            f"{len(edges)} edges exceed the cycle-enumeration cap of {CYCLE_EDGE_CAP}")

    order = {e.id: k for k, e in enumerate(edges)}
    adj = {v.id: [] for v in graph.vertices}
    for e in edges:
        if not e.is_loop():
            adj[e.tail].append((e, e.head))
            adj[e.head].append((e, e.tail))

    found = set()
    for start in edges:
        if start.is_loop():
            found.add(frozenset([start.id]))
            continue
        # Simple paths from head back to tail using only edges that come
        # after the start edge, so each cycle is discovered from its
        # smallest edge.
        target = start.tail

        def search(v, visited, used):
            for e, w in adj[v]:
                if order[e.id] <= order[start.id] or e.id in used:
                    continue
                if w == target:
                    found.add(frozenset(used + [start.id, e.id]))
                    continue
                if w in visited:
                    continue
                search(w, visited | {w}, used + [e.id])

        search(start.head, {start.head, start.tail}, [])
    return sorted(found, key=lambda c: (len(c), sorted(c)))


def aligned_bruteforce(graph: LabelledGraph) -> bool:
    """Literal reading of alignment: on every simple cycle, all pairs of
    edge labels are parallel."""
    for cycle in enumerate_cycles(graph):
        ids = sorted(cycle)
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                la = graph.edge(ids[a]).label
                lb = graph.edge(ids[b]).label
                if not labels_parallel(la, lb):
                    return False
    return True


def _random_label(rng: SplitMix64, cfg: GeneratorConfig, is_loop: bool) -> tuple:
    n, mx = cfg.num_params, cfg.max_exponent
    mode = cfg.class_constraint
    if mode == "regular":
        i = rng.below(n)
        return tuple(1 if k == i else 0 for k in range(n))
    if mode == "single_param":
        return tuple([1 + rng.below(mx)] + [0] * (n - 1))
    if mode == "disciplined" and is_loop:
        i = rng.below(n)
        m = 1 + rng.below(mx)
        return tuple(m if k == i else 0 for k in range(n))
    while True:
        label = tuple(rng.below(mx + 1) for _ in range(n))
        if any(label):
            return label


def random_labelled_graph(config: GeneratorConfig) -> LabelledGraph:
    """Deterministic for a given config: a random spanning tree first, then
    extra edges (loops allowed), labels filtered by the class constraint."""
    config.check()
    rng = SplitMix64(config.seed)
    k = config.num_vertices
    vertices = [Vertex(id=f"v{i + 1}", genus=rng.below(3)) for i in range(k)]
    ids = [v.id for v in vertices]

    ends = []
    for i in range(1, k):
        ends.append((ids[rng.below(i)], ids[i]))
    for _ in range(config.num_edges - (k - 1)):
        ends.append((ids[rng.below(k)], ids[rng.below(k)]))

    edges = []
    for j, (tail, head) in enumerate(ends):
        label = _random_label(rng, config, tail == head)
        edges.append(Edge(id=f"e{j + 1}", tail=tail, head=head, label=label))

    graph = LabelledGraph(num_params=config.num_params,
                          vertices=tuple(vertices), edges=tuple(edges))
    require_valid(graph)
    return graph
