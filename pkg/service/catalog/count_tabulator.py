import logging
from typing import Optional

import pandas as pd
from pandas import DataFrame

from dto.cycle_index import CycleIndex
from dto.exceptions import TruncationError
from service.core.cycle_index_ring import CycleIndexRing
from service.catalog.species_catalog import SpeciesCatalog

logger = logging.getLogger(__name__)


class CountTabulator:
    """Labeled and unlabeled structure counts read off a cycle index."""

    COUNT_COLUMN = 'count'

    @staticmethod
    def count_table(f: CycleIndex, labeled: bool, n_max: int) -> DataFrame:
        """Counts for every size up to n_max.

        Args:
            f: One- or two-sort cycle index.
            labeled: EGF extraction when True, OGF extraction otherwise.
            n_max: Largest total size to tabulate.

        Returns:
            Columns n, count for one sort; m, n, count for two sorts (m + n <= n_max).

        Raises:
            TruncationError: If n_max exceeds the truncation degree of f.
        """
        if n_max > f.maxdeg:
            raise TruncationError(f"n_max {n_max} exceeds truncation degree {f.maxdeg}")
        if n_max < 0:
            raise ValueError(f"n_max must be nonnegative, got {n_max}")
        extract = CycleIndexRing.labeled_count if labeled else CycleIndexRing.unlabeled_count
        if f.sorts == 1:
            rows = [{'n': n, CountTabulator.COUNT_COLUMN: extract(f, [n])} for n in range(n_max + 1)]
            return pd.DataFrame(rows, columns=['n', CountTabulator.COUNT_COLUMN])
        if f.sorts == 2:
            rows = []
            for total in range(n_max + 1):
                for m in range(total, -1, -1):
                    rows.append({'m': m, 'n': total - m, CountTabulator.COUNT_COLUMN: extract(f, [m, total - m])})
            return pd.DataFrame(rows, columns=['m', 'n', CountTabulator.COUNT_COLUMN])
        raise ValueError(f"Count tables support one or two sorts, got {f.sorts}")

    @classmethod
    def counts(cls, name: str, labeled: bool, n_max: int, maxdeg: Optional[int] = None) -> DataFrame:
        """Count table of a catalog species, computed at maxdeg (n_max when not given)."""
        degree = n_max if maxdeg is None else maxdeg
        logger.info("tabulating %s counts for %s up to %d", "labeled" if labeled else "unlabeled", name, n_max)
        return cls.count_table(SpeciesCatalog.species_ci(name, degree), labeled, n_max)

    @staticmethod
    def sequence(table: DataFrame) -> list:
        """One-sort count column as a plain list of ints."""
        return [int(v) for v in table[CountTabulator.COUNT_COLUMN]]
