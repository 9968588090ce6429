"""Per-parameter component groups via the monodromy pairing.

Over the trait at parameter i, the surviving edges of the contraction carry
weights equal to their t_i-exponents.  The pairing of two homology classes
sums weight * coefficient * coefficient over surviving edges; the component
group is the cokernel of the resulting Gram matrix, read off its invariant
factors.  An exhaustive weighted spanning-tree count provides an
independent check of the group order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod

from .errors import InternalInvariantError, SizeLimitError
from .graph import LabelledGraph, contract, cycle_space_basis
from .intlin import IntMatrix, determinant, smith_normal_form

__all__ = [
    "ComponentGroup",
    "monodromy_pairing",
    "component_group",
    "spanning_tree_order_oracle",
]


@dataclass(frozen=True)
class ComponentGroup:
    param: int
    gram: IntMatrix
    invariant_factors: list
    order: int

    def to_json_obj(self) -> dict:
        return {"param": self.param,
                "invariant_factors": list(self.invariant_factors),
                "order": self.order}


def monodromy_pairing(graph: LabelledGraph, i: int) -> IntMatrix:
    """Gram matrix of the weighted pairing on the fundamental-cycle basis of
    the contraction at parameter i.  Symmetric positive definite whenever the
    contraction has cycles."""
    small = contract(graph, [i]).graph
    basis = cycle_space_basis(small)
    weights = [e.label[0] for e in small.sorted_edges()]
    mu = len(basis)
    rows = [[sum(w * a[k] * b[k] for k, w in enumerate(weights))
             for b in basis] for a in basis]
    return IntMatrix.from_rows(mu, mu, rows)


def component_group(graph: LabelledGraph, i: int) -> ComponentGroup:
    gram = monodromy_pairing(graph, i)
    snf = smith_normal_form(gram)
    factors = snf.diagonal
    if any(d < 1 for d in factors):
        raise InternalInvariantError("monodromy pairing is degenerate")
    order = prod(factors)
    if order != determinant(gram):
        raise InternalInvariantError("invariant factors disagree with det")
    return ComponentGroup(param=i, gram=gram, invariant_factors=factors,
                          order=order)


def spanning_tree_order_oracle(graph: LabelledGraph, i: int,
                               max_edges: int = 12) -> int:
    """Sum over spanning trees T of the contraction at i of the product of
    weights of the edges outside T, by exhaustive enumeration."""
    small = contract(graph, [i]).graph
    edges = small.sorted_edges()
    if len(edges) > max_edges:
        raise SizeLimitError(
            f"{len(edges)} edges exceed the oracle cap of {max_edges}")
    nonloops = [e for e in edges if not e.is_loop()]
    loop_weight = prod(e.label[0] for e in edges if e.is_loop())
    verts = sorted(v.id for v in small.vertices)
    need = len(verts) - 1

    total = 0
    for tree in combinations(nonloops, need):
        parent = {v: v for v in verts}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for e in tree:
            ra, rb = find(e.tail), find(e.head)
            if ra == rb:
                acyclic = False
                break
            parent[ra] = rb
        if not acyclic:
            continue
        omitted = prod(e.label[0] for e in nonloops if e not in tree)
        total += omitted * loop_weight
    return total
