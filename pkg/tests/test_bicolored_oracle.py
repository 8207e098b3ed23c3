import pytest

from dto.enums.bicolored_property import BicoloredProperty
from dto.exceptions import OracleSizeError
from dto.graph import BicoloredGraph
from service.graphs.bicolored_oracle import BicoloredOracle, bicolored_canonical_codes

BP = BicoloredProperty


def test_two_by_two():
    assert BicoloredOracle.count_bicolored([], 2, 2, labeled=True) == 16
    assert BicoloredOracle.count_bicolored([], 2, 2) == 7
    assert BicoloredOracle.by_edges([], 2, 2) == {0: 1, 1: 1, 2: 3, 3: 1, 4: 1}


def test_edge_distribution():
    assert BicoloredOracle.by_edges([], 2, 3)[4] == 3
    assert BicoloredOracle.by_edges([], 0, 3) == {0: 1}


def test_canonical_codes_respect_colors():
    canon = bicolored_canonical_codes(1, 2)
    assert canon[0b01] == canon[0b10]
    assert len(set(canon.tolist())) == 3


@pytest.mark.parametrize("m, n, edges, semi_pd, pd, connected", [
    (1, 1, [], True, False, False),
    (1, 1, [(0, 0)], True, True, True),
    (1, 0, [], True, True, True),
    (2, 0, [], False, False, False),
    (2, 1, [(0, 0)], True, True, False),
    (1, 2, [(0, 0), (0, 1)], False, False, True),
])
def test_classify(m, n, edges, semi_pd, pd, connected):
    flags = BicoloredOracle.classify(BicoloredGraph.from_edges(m, n, edges))
    assert (flags.semi_pd, flags.pd, flags.connected) == (semi_pd, pd, connected)


def test_connected_point_determining_counts():
    assert BicoloredOracle.count_bicolored([BP.PD, BP.CONNECTED], 2, 2) == 1
    assert BicoloredOracle.count_bicolored([BP.CONNECTED], 2, 2, labeled=True) == 5


def test_size_limit():
    with pytest.raises(OracleSizeError):
        BicoloredOracle.census(4, 4)
    with pytest.raises(ValueError):
        BicoloredOracle.census(-1, 2)
