import json
from fractions import Fraction

import pytest

from dto.exceptions import SpeciesError
from service.catalog.fixture_verifier import FixtureVerifier
from service.catalog.species_catalog import SpeciesCatalog
from util.file_utils import load_count_tables, load_manifest, read_fixture

MANIFEST = load_manifest()
COUNT_TABLES = load_count_tables()


def test_manifest_lists_every_table():
    names = {f['name'] for f in MANIFEST}
    assert names == {'P', 'Qc', 'Pc', 'M', 'Mc', 'C', 'B', 'Bc', 'GXY', 'GcXY', 'PsXY', 'PcXY', 'PXY'}


@pytest.mark.parametrize("fixture", MANIFEST, ids=lambda f: f['name'])
def test_table_matches(fixture):
    result = FixtureVerifier.table_check(fixture)
    assert result.passed, result.detail


@pytest.mark.parametrize("fixture", [f for f in MANIFEST if 'molecular' in f], ids=lambda f: f['name'])
def test_molecular_decomposition_matches(fixture):
    result = FixtureVerifier.molecular_check(fixture)
    assert result.passed, result.detail


def test_read_fixture_skips_comments():
    fixture = next(f for f in MANIFEST if f['name'] == 'GcXY')
    f = read_fixture(fixture, 2)
    assert f.sorts == 2
    assert f.coefficient(((0, 1, 1), (1, 1, 1))) == 1


def test_corrections_are_listed():
    flags = FixtureVerifier.flags()
    assert any(flag.startswith("Bc:") and "171/10" in flag for flag in flags)
    assert any(flag.startswith("B:") for flag in flags)


def test_mismatching_fixture_fails(tmp_path):
    (tmp_path / 'manifest.json').write_text(json.dumps(
        {'fixtures': [{'name': 'E', 'file': 'E.txt', 'degree': 2}]}))
    (tmp_path / 'E.txt').write_text("1 + p1 + p1^2\n")
    results = FixtureVerifier.run(str(tmp_path))
    assert [r.passed for r in results] == [False]


def test_malformed_manifest(tmp_path):
    (tmp_path / 'manifest.json').write_text(json.dumps({'fixtures': [{'name': 'E'}]}))
    with pytest.raises(SpeciesError):
        load_manifest(str(tmp_path))


def test_run_passes_on_shipped_fixtures():
    results = FixtureVerifier.run()
    assert len(results) == len(MANIFEST) + sum('molecular' in f for f in MANIFEST) + 2 * len(COUNT_TABLES)
    assert all(r.passed for r in results)
    assert SpeciesCatalog.entry('PcXY').sorts == 2


def test_every_fixture_names_its_source():
    assert all(f['source'].startswith("published ") for f in MANIFEST + COUNT_TABLES)
    assert FixtureVerifier.table_check(MANIFEST[0]).source == MANIFEST[0]['source']


def test_cographs_through_degree_six():
    fixture = next(f for f in MANIFEST if f['name'] == 'C')
    table = read_fixture(fixture, 1)
    assert table.maxdeg == 6
    assert table.coefficient(((0, 2, 3),)) == Fraction(3)
    assert table.coefficient(((0, 3, 2),)) == Fraction(7, 9)
    # unlabeled cographs on six vertices
    assert sum(c for mon, c in table.degree_part(6).terms.items()) == 66
    assert any(flag.startswith("C:") and "7/9 p3^2" in flag for flag in FixtureVerifier.flags())


@pytest.mark.parametrize("table", COUNT_TABLES, ids=lambda t: t['name'])
@pytest.mark.parametrize("kind", ["labeled", "unlabeled"])
def test_printed_counts_match(table, kind):
    result = FixtureVerifier.count_check(table, kind)
    assert result.passed, result.detail


def test_printed_bicolored_terms_are_listed():
    tables = {t['name']: t for t in COUNT_TABLES}
    assert set(tables) == {'GXY', 'GcXY', 'PXY'}
    assert [3, 2, 4] in tables['GcXY']['unlabeled']
    assert [2, 3, 24] in tables['PXY']['labeled']


def test_mismatching_printed_count_fails(tmp_path):
    (tmp_path / 'manifest.json').write_text(json.dumps(
        {'fixtures': [], 'counts': [{'name': 'GXY', 'labeled': [[1, 1, 2], [1, 2, 5]]}]}))
    results = FixtureVerifier.run(str(tmp_path))
    assert [r.tag for r in results] == ['labeled-counts-GXY']
    assert not results[0].passed
    assert "[1, 2]: printed 5, computed 4" in results[0].detail
