import logging
from functools import lru_cache
from itertools import permutations
from typing import Iterable

import numpy as np
import pandas as pd
from pandas import DataFrame

from dto.enums.graph_property import GraphProperty
from dto.exceptions import OracleSizeError
from dto.graph import Graph, edge_pairs
from service.graphs.graph_classifier import GraphClassifier

logger = logging.getLogger(__name__)


def relabel_shifts(n: int) -> np.ndarray:
    """Bit position of every edge pair after every vertex permutation, one row per permutation."""
    pairs = edge_pairs(n)
    top = len(pairs) - 1
    index = {pair: i for i, pair in enumerate(pairs)}
    return np.array([[top - index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs]
                     for perm in permutations(range(n))], dtype=np.int64)


def canonical_codes(n: int) -> np.ndarray:
    """Smallest code over all vertex relabelings, for every labeled graph on n vertices.

    Walks the codes in increasing order and relabels only the first code of each
    isomorphism class, so the cost grows with the number of classes, not of labeled graphs.
    """
    shifts = relabel_shifts(n)
    top = shifts.shape[1] - 1
    total = 1 << shifts.shape[1]
    canon = np.full(total, -1, dtype=np.int64)
    positions = top - np.arange(shifts.shape[1], dtype=np.int64)
    start = 0
    while start < total:
        bits = (start >> positions) & 1
        orbit = (bits[np.newaxis, :] << shifts).sum(axis=1)
        canon[orbit] = start
        unseen = np.flatnonzero(canon[start:] < 0)
        start = start + int(unseen[0]) if len(unseen) else total
    return canon


class GraphOracle:
    """Brute-force counts over all labeled graphs on n vertices."""

    MAX_N = 7
    FLAG_COLUMNS = [p.value for p in GraphProperty]

    @staticmethod
    def _check_size(n: int):
        if n < 0:
            raise ValueError(f"Vertex count must be nonnegative, got {n}")
        if n > GraphOracle.MAX_N:
            raise OracleSizeError(f"Oracle enumeration is limited to n <= {GraphOracle.MAX_N}, got {n}")

    @staticmethod
    @lru_cache(maxsize=None)
    def _census(n: int) -> DataFrame:
        canon = canonical_codes(n)
        representatives = np.unique(canon)
        logger.info("oracle: %d labeled and %d unlabeled graphs on %d vertices", len(canon), len(representatives), n)
        flags = pd.DataFrame([GraphClassifier.classify(Graph.from_code(n, int(c))).as_dict() for c in representatives],
                             index=pd.Index(representatives, name='canon'))
        census = pd.DataFrame({'code': np.arange(len(canon), dtype=np.int64), 'canon': canon})
        census['edges'] = [bin(int(c)).count('1') for c in census['code']]
        return census.join(flags, on='canon')

    @staticmethod
    def census(n: int) -> DataFrame:
        """One row per labeled graph: code, canonical code, edge count and every property flag.

        Flags are computed once per isomorphism class and broadcast to its labelings.
        """
        GraphOracle._check_size(n)
        return GraphOracle._census(n).copy()

    @staticmethod
    def _mask(census: DataFrame, properties: Iterable[GraphProperty]) -> pd.Series:
        mask = pd.Series(True, index=census.index)
        for p in properties:
            mask &= census[p.value]
        return mask

    @classmethod
    def count_labeled(cls, properties: Iterable[GraphProperty], n: int) -> int:
        """Labeled graphs on n vertices with every listed property."""
        census = cls.census(n)
        return int(cls._mask(census, properties).sum())

    @classmethod
    def count_unlabeled(cls, properties: Iterable[GraphProperty], n: int) -> int:
        census = cls.census(n)
        return int((cls._mask(census, properties) & (census['code'] == census['canon'])).sum())

    @classmethod
    def representatives(cls, properties: Iterable[GraphProperty], n: int) -> list:
        """One graph per isomorphism class with the properties, by canonical code."""
        census = cls.census(n)
        rows = census[cls._mask(census, properties) & (census['code'] == census['canon'])]
        return [Graph.from_code(n, int(c)) for c in rows['code']]

    @classmethod
    def complement_duality(cls, n: int) -> bool:
        """g is point-determining exactly when its complement is co-point-determining."""
        census = cls.census(n).set_index('code')
        full = (1 << len(edge_pairs(n))) - 1
        complement_co_pd = census['co_pd'].reindex(full ^ census.index.to_numpy()).to_numpy()
        return bool((census['pd'].to_numpy() == complement_co_pd).all())
