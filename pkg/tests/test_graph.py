import pytest
from hypothesis import given

from dto.graph import BicoloredGraph, Graph, edge_pairs
from strategies import graphs


@given(graphs())
def test_code_round_trip(g):
    assert Graph.from_code(g.n, g.code()) == g


def test_code_reads_pairs_in_row_order():
    assert edge_pairs(3) == [(0, 1), (0, 2), (1, 2)]
    assert Graph.path(3).code() == 0b101
    assert Graph.from_code(3, 0b010).edges() == [(0, 2)]


def test_named_graphs():
    assert Graph.path(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert Graph.complete(3).edges() == [(0, 1), (0, 2), (1, 2)]
    assert Graph.empty(3).edges() == []
    assert Graph.empty(0).n == 0


@pytest.mark.parametrize("n, adjacency", [
    (2, (0b10, 0)),
    (1, (0b1,)),
    (2, (0b10,)),
    (2, (0b110, 0b1)),
    (33, (0,) * 33),
])
def test_invalid_adjacency(n, adjacency):
    with pytest.raises(ValueError):
        Graph(n, adjacency)


def test_from_edges_rejects_loops_and_strangers():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_induced_and_relabel():
    g = Graph.path(4)
    assert g.induced([1, 2, 3]) == Graph.path(3)
    assert g.induced([3, 0]).edges() == []
    assert g.relabel([3, 2, 1, 0]) == g
    assert g.degree(1) == 2
    assert g.neighbors(1) == [0, 2]
    assert g.closed_neighborhood(0) == 0b11


def test_bicolored_layout():
    g = BicoloredGraph.from_edges(2, 3, [(0, 0), (1, 2)])
    assert g.rows == (0b001, 0b100)
    assert g.code() == 1 + (0b100 << 3)
    assert BicoloredGraph.from_code(2, 3, g.code()) == g
    assert g.columns() == (0b01, 0b00, 0b10)
    assert g.as_graph().edges() == [(0, 2), (1, 4)]


def test_bicolored_validation():
    with pytest.raises(ValueError):
        BicoloredGraph(1, 2, (0b100,))
    with pytest.raises(ValueError):
        BicoloredGraph.from_edges(1, 1, [(0, 1)])
