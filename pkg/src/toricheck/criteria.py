"""Decision procedures for the four graph criteria, each with a witness.

- toric_additive: the first Betti number equals the sum over parameters of
  the Betti numbers of the contractions (equivalently, the purity map is an
  isomorphism).
- aligned: on every cycle, all edge labels are pairwise positive-rational
  multiples of one another.  Decided per biconnected block: two distinct
  edges lie on a common cycle iff they share a block.
- disciplined: every loop label is supported on a single parameter.
- regular: every label is a unit coordinate vector (the total space is
  regular at every node).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InternalInvariantError, ToricheckError
from .graph import LabelledGraph, betti_one, contract
from .purity import purity_report

__all__ = [
    "CriterionVerdict",
    "labels_parallel",
    "blocks",
    "is_aligned",
    "is_toric_additive",
    "is_disciplined",
    "is_regular_model",
    "check_all",
    "CRITERIA",
]

CRITERIA = ("toric_additive", "aligned", "disciplined", "regular")


@dataclass(frozen=True)
class CriterionVerdict:
    criterion: str
    holds: bool
    witness: Optional[dict] = None

    def to_json_obj(self) -> dict:
        return {"criterion": self.criterion, "holds": self.holds,
                "witness": self.witness}


def labels_parallel(a, b) -> bool:
    """True iff the exponent vectors are positive rational multiples of one
    another, i.e. all 2x2 cross products vanish."""
    if not any(a) or not any(b):
        raise ToricheckError("labels_parallel requires nonzero vectors")
    n = len(a)
    return all(a[i] * b[j] == a[j] * b[i]
               for i in range(n) for j in range(i + 1, n))


def blocks(graph: LabelledGraph) -> list:
    """Biconnected blocks as frozensets of edge ids; loops and bridges are
    singleton blocks.  Blocks are returned sorted for determinism."""
    adj = {v.id: [] for v in graph.vertices}
    loops = []
    for e in graph.sorted_edges():
        if e.is_loop():
            loops.append(frozenset([e.id]))
        else:
            adj[e.tail].append((e.id, e.head))
            adj[e.head].append((e.id, e.tail))

    disc = {}
    low = {}
    edge_stack = []
    out = []
    counter = [0]

    for start in sorted(adj):
        if start in disc:
            continue
        # Iterative Hopcroft-Tarjan with explicit frames.
        frames = [(start, None, iter(adj[start]))]
        disc[start] = low[start] = counter[0]
        counter[0] += 1
        while frames:
            v, in_edge, it = frames[-1]
            advanced = False
            for eid, w in it:
                if eid == in_edge:
                    continue
                if w not in disc:
                    edge_stack.append(eid)
                    disc[w] = low[w] = counter[0]
                    counter[0] += 1
                    frames.append((w, eid, iter(adj[w])))
                    advanced = True
                    break
                elif disc[w] < disc[v]:
                    edge_stack.append(eid)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            frames.pop()
            if frames:
                p, p_in, _ = frames[-1]
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    block = []
                    while edge_stack:
                        block.append(edge_stack.pop())
                        if block[-1] == in_edge:
                            break
                    out.append(frozenset(block))
    out.extend(loops)
    out.sort(key=lambda b: sorted(b))
    return out


def _cycle_through(graph: LabelledGraph, e, f):
    """A simple cycle (list of edge ids) containing both non-loop edges e and
    f; assumes they share a biconnected block, so one exists.  Backtracking
    search over simple paths from head(e) to tail(e) avoiding e itself."""
    adj = {v.id: [] for v in graph.vertices}
    for g in graph.sorted_edges():
        if g.is_loop() or g.id == e.id:
            continue
        adj[g.tail].append((g, g.head))
        adj[g.head].append((g, g.tail))

    target = e.tail

    def search(v, visited, used):
        for g, w in adj[v]:
            if g.id in used:
                continue
            if w == target:
                if f.id in used or g.id == f.id:
                    return used + [g.id]
                continue
            if w in visited:
                continue
            found = search(w, visited | {w}, used + [g.id])
            if found is not None:
                return found
        return None

    path = search(e.head, {e.head, e.tail}, [])
    if path is None:
        raise InternalInvariantError(
            f"edges {e.id!r} and {f.id!r} share a block but no common cycle found")
    return [e.id] + path


def is_aligned(graph: LabelledGraph) -> CriterionVerdict:
    """Within every block of two or more edges, all labels must be pairwise
    parallel.  The witness exhibits an offending pair plus an explicit cycle
    through both edges."""
    for block in blocks(graph):
        if len(block) < 2:
            continue
        ids = sorted(block)
        first = graph.edge(ids[0])
        for other_id in ids[1:]:
            other = graph.edge(other_id)
            if not labels_parallel(first.label, other.label):
                cycle = _cycle_through(graph, first, other)
                witness = {"edges": [first.id, other.id], "cycle": cycle}
                return CriterionVerdict("aligned", False, witness)
    return CriterionVerdict("aligned", True)


def is_toric_additive(graph: LabelledGraph) -> CriterionVerdict:
    mu = betti_one(graph)
    mus = [betti_one(contract(graph, [i]).graph)
           for i in range(1, graph.num_params + 1)]
    holds = mu == sum(mus)
    report = purity_report(graph)
    if report.is_isomorphism != holds:
        raise InternalInvariantError(
            "Betti-sum criterion disagrees with the purity-map classification")
    witness = None if holds else {"domain_rank": mu, "codomain_ranks": mus}
    return CriterionVerdict("toric_additive", holds, witness)


def is_disciplined(graph: LabelledGraph) -> CriterionVerdict:
    for e in graph.sorted_edges():
        if e.is_loop():
            support = [i + 1 for i, m in enumerate(e.label) if m > 0]
            if len(support) > 1:
                witness = {"edge": e.id, "label": list(e.label)}
                return CriterionVerdict("disciplined", False, witness)
    return CriterionVerdict("disciplined", True)


def is_regular_model(graph: LabelledGraph) -> CriterionVerdict:
    for e in graph.sorted_edges():
        if sum(e.label) != 1:
            witness = {"edge": e.id, "label": list(e.label)}
            return CriterionVerdict("regular", False, witness)
    return CriterionVerdict("regular", True)


def check_all(graph: LabelledGraph) -> dict:
    """All four verdicts, with the implication chain asserted on this
    instance: toric-additive implies aligned and disciplined, and on a
    regular model alignment and toric additivity coincide."""
    verdicts = {
        "toric_additive": is_toric_additive(graph),
        "aligned": is_aligned(graph),
        "disciplined": is_disciplined(graph),
        "regular": is_regular_model(graph),
    }
    ta = verdicts["toric_additive"].holds
    if ta and not verdicts["aligned"].holds:
        raise InternalInvariantError("toric-additive graph is not aligned")
    if ta and not verdicts["disciplined"].holds:
        raise InternalInvariantError("toric-additive graph is not disciplined")
    if verdicts["regular"].holds and verdicts["aligned"].holds != ta:
        raise InternalInvariantError(
            "on a regular model, alignment must match toric additivity")
    return verdicts
