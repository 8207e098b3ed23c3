from itertools import permutations

import numpy as np
import pytest

from dto.enums.graph_property import GraphProperty
from dto.exceptions import OracleSizeError
from dto.graph import Graph
from service.graphs.graph_oracle import GraphOracle, canonical_codes

GP = GraphProperty


def test_canonical_codes_on_three_vertices():
    canon = canonical_codes(3)
    assert len(canon) == 8
    assert len(np.unique(canon)) == 4
    assert canon[Graph.path(3).code()] == canon[Graph.from_edges(3, [(0, 2), (1, 2)]).code()]


def test_canonical_code_is_smallest_relabeling():
    canon = canonical_codes(4)
    for code in range(len(canon)):
        g = Graph.from_code(4, code)
        relabelings = [Graph.from_edges(4, [(perm[u], perm[v]) for u, v in g.edges()]).code()
                       for perm in permutations(range(4))]
        assert canon[code] == min(relabelings)


def test_canonical_codes_of_trivial_sizes():
    assert canonical_codes(0).tolist() == [0]
    assert canonical_codes(1).tolist() == [0]
    assert canonical_codes(2).tolist() == [0, 1]


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_unlabeled_graphs(n, expected):
    assert GraphOracle.count_unlabeled([], n) == expected


@pytest.mark.parametrize("props, n, labeled, expected", [
    ([GP.PD], 5, True, 588),
    ([GP.PD], 4, False, 5),
    ([GP.BIPD], 5, False, 6),
    ([GP.BIPD], 4, True, 12),
    ([GP.COGRAPH], 4, True, 52),
    ([GP.CONNECTED], 4, True, 38),
    ([GP.CONNECTED, GP.ACYCLIC], 5, True, 125),
    ([GP.CONNECTED, GP.ENDPOINT_FREE], 4, False, 3),
])
def test_property_counts(props, n, labeled, expected):
    count = GraphOracle.count_labeled(props, n) if labeled else GraphOracle.count_unlabeled(props, n)
    assert count == expected


def test_census_columns():
    census = GraphOracle.census(3)
    assert list(census.columns[:3]) == ['code', 'canon', 'edges']
    assert set(GraphOracle.FLAG_COLUMNS) <= set(census.columns)
    assert census['edges'].tolist() == [0, 1, 1, 2, 1, 2, 2, 3]


def test_representatives():
    reps = GraphOracle.representatives([GP.BIPD, GP.CONNECTED], 4)
    assert [g.edges() for g in reps] == [[(0, 3), (1, 2), (2, 3)]]


@pytest.mark.parametrize("n", range(6))
def test_complement_duality(n):
    assert GraphOracle.complement_duality(n)


def test_size_limits():
    with pytest.raises(OracleSizeError):
        GraphOracle.census(8)
    with pytest.raises(ValueError):
        GraphOracle.census(-1)
