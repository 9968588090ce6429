from itertools import combinations

import pytest

from toricheck import (GraphValidationError, IntMatrix, InvalidParameterError,
                       arithmetic_genus, betti_one, contract,
                       cycle_space_basis, incidence_matrix, kernel_basis,
                       require_valid, solve_integer, validate)
from toricheck.oracle import GeneratorConfig, SplitMix64, random_labelled_graph

from conftest import make_graph


class TestValidate:
    def test_single_vertex_ok(self):
        g = make_graph(2, [("v", 0)], [])
        assert validate(g) == []

    def test_disconnected(self):
        g = make_graph(2, [("a", 0), ("b", 0)], [])
        assert any("disconnected" in v for v in validate(g))

    def test_zero_label(self):
        g = make_graph(2, [("v", 0)], [("e", "v", "v", (0, 0))])
        assert any("zero label" in v for v in validate(g))

    def test_wrong_label_length(self):
        g = make_graph(2, [("v", 0)], [("e", "v", "v", (1,))])
        assert any("length" in v for v in validate(g))

    def test_bad_endpoint(self):
        g = make_graph(1, [("v", 0)], [("e", "v", "w", (1,))])
        assert any("endpoint" in v for v in validate(g))

    def test_duplicate_ids(self):
        g = make_graph(1, [("v", 0), ("v", 1)], [])
        assert any("duplicate vertex" in v for v in validate(g))

    def test_require_valid_raises(self):
        g = make_graph(2, [("a", 0), ("b", 0)], [])
        with pytest.raises(GraphValidationError):
            require_valid(g)


class TestBettiGenus:
    def test_golden_loop(self, g_t):
        assert betti_one(g_t) == 1
        assert arithmetic_genus(g_t) == 1

    def test_path_is_tree(self):
        g = make_graph(1, [("a", 0), ("b", 0), ("c", 0)],
                       [("e1", "a", "b", (1,)), ("e2", "b", "c", (1,))])
        assert betti_one(g) == 0

    def test_parallel_edges(self, g_b):
        assert betti_one(g_b) == 1
        assert arithmetic_genus(g_b) == 2

    def test_smooth_fibre(self):
        g = make_graph(1, [("v", 3)], [])
        assert arithmetic_genus(g) == 3


class TestContract:
    def test_golden_keeps_loop(self, g_t):
        res = contract(g_t, [1])
        assert betti_one(res.graph) == 1
        assert res.graph.num_params == 1
        assert [e.label for e in res.graph.edges] == [(1,)]
        assert arithmetic_genus(res.graph) == 1

    def test_parallel_edges_merge(self, g_b):
        res = contract(g_b, [1])
        assert len(res.graph.vertices) == 1
        assert [e.label for e in res.graph.edges] == [(1,)]
        assert res.graph.edges[0].is_loop()
        assert betti_one(res.graph) == 1

    def test_whole_cycle_contracted(self, triangle):
        res = contract(triangle, [2])
        assert len(res.graph.vertices) == 1
        assert res.graph.edges == ()
        assert res.graph.vertices[0].genus == 1  # cycle class picks up h1

    def test_invalid_param(self, g_t):
        with pytest.raises(InvalidParameterError):
            contract(g_t, [3])
        with pytest.raises(InvalidParameterError):
            contract(g_t, [])

    def test_genus_preserved_random(self):
        for seed in range(40):
            g = random_labelled_graph(GeneratorConfig(5, 8, 3, 3, seed))
            for k in (1, 2, 3):
                for sub in combinations((1, 2, 3), k):
                    c = contract(g, sub).graph
                    assert validate(c) == []
                    assert arithmetic_genus(c) == arithmetic_genus(g)
                    assert betti_one(c) <= betti_one(g)

    def test_transitivity(self):
        # contracting to I then to J (re-indexed) equals contracting to J.
        for seed in range(30):
            g = random_labelled_graph(GeneratorConfig(4, 7, 3, 2, seed))
            res_i = contract(g, [1, 3])
            # J = {3} sits at position 2 inside I = {1, 3}.
            two_step = contract(res_i.graph, [2]).graph
            one_step = contract(g, [3]).graph
            assert two_step == one_step


class TestIncidence:
    def test_loop_column_zero(self, g_t):
        m = incidence_matrix(g_t)
        assert m.to_lists() == [[0]]

    def test_single_edge(self):
        g = make_graph(1, [("u", 0), ("v", 0)], [("e", "u", "v", (1,))])
        assert incidence_matrix(g).column(0) == (-1, 1)

    def test_parallel_columns(self, g_b):
        m = incidence_matrix(g_b)
        assert m.column(0) == (-1, 1)
        assert m.column(1) == (-1, 1)


class TestCycleSpace:
    def test_tree_empty(self):
        g = make_graph(1, [("a", 0), ("b", 0)], [("e", "a", "b", (1,))])
        assert cycle_space_basis(g) == []

    def test_loop(self, g_t):
        assert cycle_space_basis(g_t) == [(1,)]

    def test_parallel_edges(self, g_b):
        # e1 is the DFS tree edge, so the fundamental cycle is e2 - e1.
        assert cycle_space_basis(g_b) == [(-1, 1)]

    def test_basis_spans_kernel(self):
        for seed in range(60):
            g = random_labelled_graph(GeneratorConfig(5, 9, 2, 3, seed))
            m = incidence_matrix(g)
            basis = cycle_space_basis(g)
            assert len(basis) == betti_one(g)
            for v in basis:
                assert all(x == 0 for x in m.matvec(v))
            kern = kernel_basis(m)
            assert len(kern) == len(basis)
            if basis:
                bmat = IntMatrix.from_columns(len(g.edges), len(basis), basis)
                for v in kern:
                    # saturation: every integral kernel vector is an integer
                    # combination of fundamental cycles
                    assert solve_integer(bmat, v) is not None
