import logging
from typing import List

from dto.check_result import CheckResult
from dto.enums.verify_suite import VerifySuite
from service.catalog.species_catalog import SpeciesCatalog
from service.core.cycle_index_ring import CycleIndexRing
from service.expr.species_evaluator import SpeciesEvaluator
from util.cycle_index_text import format_cycle_index
from util.file_utils import FIXTURES_DIR, load_count_tables, load_manifest, read_fixture

logger = logging.getLogger(__name__)

SUITE = VerifySuite.FIXTURES.value
COUNT_KINDS = ('labeled', 'unlabeled')


class FixtureVerifier:
    """Compares catalog cycle indices with the stored reference tables."""

    @staticmethod
    def table_check(fixture: dict, fixtures_dir: str = FIXTURES_DIR) -> CheckResult:
        name, degree = fixture['name'], fixture['degree']
        entry = SpeciesCatalog.entry(name)
        expected = read_fixture(fixture, entry.sorts, fixtures_dir)
        computed = SpeciesCatalog.species_ci(name, degree)
        passed = computed.agrees_with(expected)
        detail = "" if passed else f"computed {format_cycle_index(computed)}"
        return CheckResult(SUITE, f"table-{name}", f"Z_{name} through degree {degree} matches {fixture['file']}",
                           passed, detail, fixture.get('source', ""))

    @staticmethod
    def molecular_check(fixture: dict) -> CheckResult:
        name, degree = fixture['name'], fixture['molecular_degree']
        computed = SpeciesCatalog.species_ci(name, degree)
        decomposed = SpeciesEvaluator.evaluate_text(fixture['molecular'], degree)
        passed = computed.agrees_with(decomposed)
        detail = "" if passed else f"decomposition gives {format_cycle_index(decomposed - computed)} extra"
        return CheckResult(SUITE, f"molecular-{name}", f"{name} = {fixture['molecular']} through degree {degree}",
                           passed, detail, fixture.get('source', ""))

    @staticmethod
    def count_check(table: dict, kind: str) -> CheckResult:
        """Compares the printed `[m, n, count]` rows of one kind; unlisted sizes are not checked."""
        name, rows = table['name'], table[kind]
        degree = max(sum(row[:-1]) for row in rows)
        f = SpeciesCatalog.species_ci(name, degree)
        extract = CycleIndexRing.labeled_count if kind == 'labeled' else CycleIndexRing.unlabeled_count
        wrong = [f"{row[:-1]}: printed {row[-1]}, computed {extract(f, row[:-1])}"
                 for row in rows if extract(f, row[:-1]) != row[-1]]
        return CheckResult(SUITE, f"{kind}-counts-{name}",
                           f"{len(rows)} printed {kind} counts of {name} through total degree {degree}",
                           not wrong, "; ".join(wrong[:5]), table.get('source', ""))

    @classmethod
    def run(cls, fixtures_dir: str = FIXTURES_DIR) -> List[CheckResult]:
        fixtures = load_manifest(fixtures_dir)
        results = []
        for fixture in fixtures:
            results.append(cls.table_check(fixture, fixtures_dir))
            if 'molecular' in fixture:
                results.append(cls.molecular_check(fixture))
            for flag in fixture.get('flags', []):
                logger.info("fixture %s: %s", fixture['name'], flag)
        for table in load_count_tables(fixtures_dir):
            results.extend(cls.count_check(table, kind) for kind in COUNT_KINDS if kind in table)
        return results

    @staticmethod
    def flags(fixtures_dir: str = FIXTURES_DIR) -> List[str]:
        return [f"{fixture['name']}: {flag}" for fixture in load_manifest(fixtures_dir)
                for flag in fixture.get('flags', [])]
