from fractions import Fraction

import pytest
from hypothesis import given

from dto.cycle_index import CycleIndex
from dto.exceptions import SpeciesError, SpeciesSyntaxError
from service.species.species_atoms import SpeciesAtoms
from strategies import cycle_indices
from util.cycle_index_text import (cycle_index_from_json, cycle_index_to_json, format_cycle_index,
                                   parse_cycle_index)


def test_format_sets():
    assert format_cycle_index(SpeciesAtoms.e(2)) == "1 + p1 + 1/2 * p1^2 + 1/2 * p2"


def test_format_zero_and_negative():
    assert format_cycle_index(CycleIndex.zero(1, 3)) == "0"
    assert format_cycle_index(CycleIndex(1, 1, {((0, 1, 1),): Fraction(-1)})) == "-p1"


def test_format_two_sorts_tags_every_factor():
    f = CycleIndex(2, 2, {((0, 1, 1), (1, 1, 1)): Fraction(2)})
    assert format_cycle_index(f) == "2 * p1[x] p1[y]"


def test_parse_sums_repeated_monomials_and_infers_shape():
    f = parse_cycle_index("p1 p2 + 1/2 * p2 p1 - 3 p1[y]^2")
    assert f.sorts == 2
    assert f.maxdeg == 3
    assert f.coefficient(((0, 1, 1), (0, 2, 1))) == Fraction(3, 2)
    assert f.coefficient(((1, 1, 2),)) == -3


@given(cycle_indices(sorts=1, maxdeg=5))
def test_text_round_trip_one_sort(f):
    assert parse_cycle_index(format_cycle_index(f), sorts=1, maxdeg=5) == f


@given(cycle_indices(sorts=2, maxdeg=4))
def test_text_round_trip_two_sorts(f):
    assert parse_cycle_index(format_cycle_index(f), sorts=2, maxdeg=4) == f


@given(cycle_indices(sorts=2, maxdeg=4))
def test_json_round_trip(f):
    assert cycle_index_from_json(cycle_index_to_json(f)) == f


@pytest.mark.parametrize("text, position", [
    ("p1 +", 4),
    ("2 3", 2),
    ("p0", 0),
    ("p1[q]", 0),
    ("1/0 * p1", 0),
    ("p1 & p2", 3),
    ("* p1", 0),
    ("", 0),
])
def test_parse_errors(text, position):
    with pytest.raises(SpeciesSyntaxError) as info:
        parse_cycle_index(text)
    assert info.value.position == position


def test_malformed_json():
    with pytest.raises(SpeciesError):
        cycle_index_from_json({'sorts': 1, 'maxdeg': 2, 'terms': [{'mon': [[0, 1, 1]], 'num': '1', 'den': '0'}]})
