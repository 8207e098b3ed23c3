import logging
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterable

import numpy as np
import pandas as pd
from pandas import DataFrame

from dto.enums.bicolored_property import BicoloredProperty
from dto.exceptions import OracleSizeError
from dto.graph import BicoloredGraph
from dto.graph_flags import BicoloredFlags
from service.graphs.graph_classifier import GraphClassifier

logger = logging.getLogger(__name__)


def bicolored_canonical_codes(m: int, n: int) -> np.ndarray:
    """Smallest code under color-preserving relabelings (S_m × S_n) for every labeled bicolored graph."""
    codes = np.arange(1 << (m * n), dtype=np.int64)
    canon = codes.copy()
    for white in permutations(range(m)):
        for black in permutations(range(n)):
            relabeled = np.zeros_like(codes)
            for i in range(m):
                for j in range(n):
                    relabeled |= ((codes >> (i * n + j)) & 1) << (white[i] * n + black[j])
            np.minimum(canon, relabeled, out=canon)
    return canon


class BicoloredOracle:
    """Brute-force counts over all bicolored graphs with m white and n black vertices."""

    MAX_VERTICES = 7

    @staticmethod
    def classify(g: BicoloredGraph) -> BicoloredFlags:
        rows, columns = g.rows, g.columns()
        semi_pd = len(set(rows)) == len(rows) and len(set(columns)) == len(columns)
        # a white and a black vertex share a neighborhood only when both are isolated
        isolated_pair = 0 in rows and 0 in columns
        return BicoloredFlags(
            semi_pd=semi_pd,
            pd=semi_pd and not isolated_pair,
            connected=GraphClassifier.is_connected(g.as_graph()),
        )

    @staticmethod
    def _check_size(m: int, n: int):
        if m < 0 or n < 0:
            raise ValueError(f"Vertex counts must be nonnegative, got ({m}, {n})")
        if m + n > BicoloredOracle.MAX_VERTICES:
            raise OracleSizeError(f"Bicolored enumeration is limited to m + n <= {BicoloredOracle.MAX_VERTICES}")

    @staticmethod
    @lru_cache(maxsize=None)
    def _census(m: int, n: int) -> DataFrame:
        canon = bicolored_canonical_codes(m, n)
        representatives = np.unique(canon)
        logger.info("bicolored oracle: %d labeled and %d unlabeled graphs for (%d, %d)",
                    len(canon), len(representatives), m, n)
        flags = pd.DataFrame(
            [BicoloredOracle.classify(BicoloredGraph.from_code(m, n, int(c))).as_dict() for c in representatives],
            index=pd.Index(representatives, name='canon'))
        census = pd.DataFrame({'code': np.arange(len(canon), dtype=np.int64), 'canon': canon})
        census['edges'] = [bin(int(c)).count('1') for c in census['code']]
        census['any'] = True
        return census.join(flags, on='canon')

    @classmethod
    def census(cls, m: int, n: int) -> DataFrame:
        cls._check_size(m, n)
        return cls._census(m, n).copy()

    @classmethod
    def _selected(cls, properties: Iterable[BicoloredProperty], m: int, n: int, labeled: bool) -> DataFrame:
        census = cls.census(m, n)
        mask = pd.Series(True, index=census.index)
        for p in properties:
            mask &= census[p.value]
        if not labeled:
            mask &= census['code'] == census['canon']
        return census[mask]

    @classmethod
    def count_bicolored(cls, properties: Iterable[BicoloredProperty], m: int, n: int, labeled: bool = False) -> int:
        return len(cls._selected(properties, m, n, labeled))

    @classmethod
    def by_edges(cls, properties: Iterable[BicoloredProperty], m: int, n: int, labeled: bool = False) -> Dict[int, int]:
        """Edge-count distribution: number of edges -> number of graphs."""
        counts = cls._selected(properties, m, n, labeled)['edges'].value_counts().sort_index()
        return {int(e): int(c) for e, c in counts.items()}
