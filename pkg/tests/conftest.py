import pytest

from toricheck import Edge, LabelledGraph, Vertex


def make_graph(num_params, vertices, edges):
    """vertices: list of (id, genus); edges: list of (id, tail, head, label)."""
    return LabelledGraph(
        num_params=num_params,
        vertices=tuple(Vertex(id=v, genus=g) for v, g in vertices),
        edges=tuple(Edge(id=e, tail=t, head=h, label=tuple(l))
                    for e, t, h, l in edges),
    )


@pytest.fixture
def g_t():
    """One genus-0 vertex with a loop labelled (1,1): the golden example."""
    return make_graph(2, [("v", 0)], [("e", "v", "v", (1, 1))])


@pytest.fixture
def g_b():
    """Two vertices joined by parallel edges labelled (1,0) and (0,1)."""
    return make_graph(2, [("u", 1), ("v", 0)],
                      [("e1", "u", "v", (1, 0)), ("e2", "u", "v", (0, 1))])


@pytest.fixture
def g_b1():
    """Two vertices joined by parallel edges both labelled (1,0)."""
    return make_graph(2, [("u", 0), ("v", 0)],
                      [("e1", "u", "v", (1, 0)), ("e2", "u", "v", (1, 0))])


@pytest.fixture
def triangle():
    """3-cycle with all edges labelled (1,0)."""
    return make_graph(2, [("a", 0), ("b", 0), ("c", 0)],
                      [("e1", "a", "b", (1, 0)), ("e2", "b", "c", (1, 0)),
                       ("e3", "c", "a", (1, 0))])
