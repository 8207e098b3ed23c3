from fractions import Fraction

import pytest

from dto.cycle_index import CycleIndex
from dto.exceptions import TruncationError, UnknownSpeciesError
from service.catalog.count_tabulator import CountTabulator
from service.catalog.species_catalog import SpeciesCatalog
from util.cycle_index_text import parse_cycle_index


def ci(name, maxdeg):
    return SpeciesCatalog.species_ci(name, maxdeg)


def test_point_determining_low_terms():
    p = ci('P', 5)
    assert p.coefficient(((0, 3, 1),)) == Fraction(1, 3)
    assert p.coefficient(((0, 1, 3),)) == Fraction(2, 3)


def test_bipd_degree_four():
    assert ci('B', 5).degree_part(4) == parse_cycle_index("1/2 * p1^4 + 1/2 * p2^2", maxdeg=5)


def test_cograph_degree_three():
    assert ci('C', 3).degree_part(3) == parse_cycle_index("4/3 * p1^3 + 2 * p1 p2 + 2/3 * p3", maxdeg=3)


def test_endpoint_free_connected_degree_three():
    assert ci('Mc', 3).degree_part(3) == parse_cycle_index("1/6 * p1^3 + 1/2 * p1 p2 + 1/3 * p3", maxdeg=3)


def test_unknown_name():
    with pytest.raises(UnknownSpeciesError):
        ci('Nope', 3)


@pytest.mark.parametrize("name", ['P', 'Pc', 'M', 'C', 'B', 'Bc', 'A', 'PXY', 'GcXY'])
def test_truncation_is_consistent(name):
    assert ci(name, 3).agrees_with(ci(name, 6))


def test_p_and_q_share_a_cycle_index():
    assert ci('P', 6) == ci('Q', 6)


def test_two_sort_entries_have_two_sorts():
    for name, entry in SpeciesCatalog.ENTRIES.items():
        assert ci(name, 3).sorts == entry.sorts, name


@pytest.mark.parametrize("name, labeled, expected", [
    ('P', False, [1, 1, 1, 2, 5, 16]),
    ('P', True, [1, 1, 1, 4, 32, 588]),
    ('B', False, [1, 1, 0, 0, 1, 6]),
    ('Bc', False, [0, 1, 0, 0, 1, 5]),
    ('C', True, [0, 1, 2, 8, 52, 472]),
    ('C', False, [0, 1, 2, 4, 10, 24]),
    ('Cc', False, [0, 1, 1, 2, 5, 12]),
    ('Ar', True, [0, 1, 2, 9, 64, 625]),
    ('Ar', False, [0, 1, 1, 2, 4, 9]),
    ('A', True, [0, 1, 1, 3, 16, 125]),
    ('A', False, [0, 1, 1, 1, 2, 3]),
    ('M', False, [1, 1, 1, 2, 5, 16]),
    ('Mc', False, [0, 1, 0, 1, 3, 11]),
    ('E', False, [1, 1, 1, 1, 1, 1]),
])
def test_counts(name, labeled, expected):
    assert CountTabulator.sequence(CountTabulator.counts(name, labeled, 5)) == expected


def test_bicolored_count_table():
    table = CountTabulator.counts('GXY', True, 4)
    assert list(table.columns) == ['m', 'n', 'count']
    row = table[(table['m'] == 2) & (table['n'] == 2)]
    assert int(row['count'].iloc[0]) == 16
    assert len(table) == 15


def test_count_past_truncation():
    with pytest.raises(TruncationError):
        CountTabulator.counts('P', True, 6, maxdeg=4)


def test_count_table_of_a_plain_series():
    table = CountTabulator.count_table(CycleIndex.one(1, 2), False, 2)
    assert CountTabulator.sequence(table) == [1, 0, 0]
