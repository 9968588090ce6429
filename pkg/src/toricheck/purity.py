"""Generization maps on graph homology and the stacked purity map.

For each parameter i, contracting the edges whose label omits t_i gives a
graph whose cycle lattice receives the cycle lattice of the full graph: a
cycle is projected onto the surviving edge coordinates and rewritten in the
contracted graph's fundamental-cycle basis.  Stacking these maps for
i = 1..n gives the purity map, which is always injective with torsion-free
cokernel; it is an isomorphism exactly when the first Betti numbers add up.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantError
from .graph import LabelledGraph, betti_one, contract, cycle_space_basis
from .intlin import IntMatrix, smith_normal_form

__all__ = ["PurityReport", "generization_matrix", "purity_matrix", "purity_report"]


@dataclass(frozen=True)
class PurityReport:
    domain_rank: int
    codomain_ranks: list
    matrix: IntMatrix
    injective: bool
    cokernel_torsion: list
    cokernel_free_rank: int
    is_isomorphism: bool

    def to_json_obj(self) -> dict:
        return {
            "domain_rank": self.domain_rank,
            "codomain_ranks": list(self.codomain_ranks),
            "matrix": self.matrix.to_lists(),
            "injective": self.injective,
            "cokernel_torsion": list(self.cokernel_torsion),
            "cokernel_free_rank": self.cokernel_free_rank,
            "is_isomorphism": self.is_isomorphism,
        }


def generization_matrix(graph: LabelledGraph, i: int) -> IntMatrix:
    """Matrix of the homology map into the contraction at parameter i,
    written in the deterministic fundamental-cycle bases on both sides.

    Shape is (h1 of the contraction) x (h1 of the graph); column j holds the
    image of the j-th domain basis cycle.
    """
    res = contract(graph, [i])
    small = res.graph
    domain = cycle_space_basis(graph)
    codomain = cycle_space_basis(small)

    edges = graph.sorted_edges()
    col_of = {e.id: k for k, e in enumerate(edges)}
    small_edges = small.sorted_edges()

    basis_mat = IntMatrix.from_columns(len(small_edges), len(codomain), codomain) \
        if codomain else IntMatrix.zeros(len(small_edges), 0)

    columns = []
    for vec in domain:
        projected = tuple(vec[col_of[res.surviving_edges[e.id]]]
                          for e in small_edges)
        if codomain:
            x = _solve_in_basis(basis_mat, projected)
        else:
            if any(projected):
                raise InternalInvariantError(
                    "projected cycle nonzero but contraction has trivial homology")
            x = ()
        columns.append(x)
    return IntMatrix.from_columns(len(codomain), len(domain), columns) \
        if domain else IntMatrix.zeros(len(codomain), 0)


def _solve_in_basis(basis_mat: IntMatrix, projected):
    from .intlin import solve_integer

    x = solve_integer(basis_mat, projected)
    if x is None:
        raise InternalInvariantError("projected cycle not in the codomain lattice")
    return x


def purity_matrix(graph: LabelledGraph) -> IntMatrix:
    """Vertical stack of the generization matrices for i = 1..num_params."""
    mu = betti_one(graph)
    blocks = [generization_matrix(graph, i) for i in range(1, graph.num_params + 1)]
    if not blocks:
        return IntMatrix.zeros(0, mu)
    return IntMatrix.vstack(blocks)


def purity_report(graph: LabelledGraph) -> PurityReport:
    """Classify the purity map; raises InternalInvariantError if one of the
    always-true facts (injectivity, torsion-free cokernel, rank inequality)
    fails, which would be a bug rather than bad input."""
    mu = betti_one(graph)
    codomain_ranks = [betti_one(contract(graph, [i]).graph)
                      for i in range(1, graph.num_params + 1)]
    matrix = purity_matrix(graph)
    snf = smith_normal_form(matrix)
    rank = snf.rank
    injective = rank == mu
    torsion = [d for d in snf.diagonal if d > 1]
    free_rank = matrix.rows - rank
    iso = mu == sum(codomain_ranks)

    if not injective:
        raise InternalInvariantError("purity map is not injective")
    if torsion:
        raise InternalInvariantError("purity cokernel has torsion")
    if mu > sum(codomain_ranks):
        raise InternalInvariantError("toric rank inequality violated")
    if iso != (free_rank == 0 and injective):
        raise InternalInvariantError("isomorphism criterion inconsistent")

    return PurityReport(
        domain_rank=mu,
        codomain_ranks=codomain_ranks,
        matrix=matrix,
        injective=injective,
        cokernel_torsion=torsion,
        cokernel_free_rank=free_rank,
        is_isomorphism=iso,
    )
