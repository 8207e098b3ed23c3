import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd

from dto.cycle_index import CycleIndex
from dto.partition import Partition
from service.core.cycle_index_ring import CycleIndexRing
from service.species.species_atoms import SpeciesAtoms, partition_monomial
from util.number_utils import partitions_of

logger = logging.getLogger(__name__)


class GraphSpecies:
    """Cycle indices of simple graphs and bicolored graphs, plus their connected parts."""

    @staticmethod
    def graphs_fix(partition: Partition) -> int:
        """Number of graphs fixed by a permutation of the given cycle type."""
        c = partition.multiplicities
        twice = sum(gcd(i, j) * ci * cj for i, ci in c.items() for j, cj in c.items())
        twice -= sum(ci for i, ci in c.items() if i % 2 == 1)
        if twice < 0 or twice % 2:
            raise ArithmeticError(f"Edge-orbit count for {partition.parts} is not a nonnegative integer")
        return 2 ** (twice // 2)

    @staticmethod
    @lru_cache(maxsize=None)
    def graphs_ci(maxdeg: int) -> CycleIndex:
        terms = {}
        for n in range(maxdeg + 1):
            for lam in partitions_of(n):
                terms[partition_monomial(lam)] = Fraction(GraphSpecies.graphs_fix(lam), lam.z())
        return CycleIndex(1, maxdeg, terms)

    @staticmethod
    @lru_cache(maxsize=None)
    def connected_graphs_ci(maxdeg: int) -> CycleIndex:
        """Gc = (1+X)^c ∘ G_+."""
        return CycleIndexRing.compose(SpeciesAtoms.combinatorial_log(maxdeg),
                                      [GraphSpecies.graphs_ci(maxdeg) - 1])

    @staticmethod
    def bicolored_fix(lam: Partition, mu: Partition) -> int:
        return 2 ** sum(gcd(a, b) for a in lam.parts for b in mu.parts)

    @staticmethod
    @lru_cache(maxsize=None)
    def bicolored_ci(maxdeg: int) -> CycleIndex:
        """Two sorts: white vertices in sort 0, black vertices in sort 1."""
        terms = {}
        for m in range(maxdeg + 1):
            for n in range(maxdeg + 1 - m):
                for lam in partitions_of(m):
                    for mu in partitions_of(n):
                        mon = partition_monomial(lam, 0) + partition_monomial(mu, 1)
                        terms[mon] = Fraction(GraphSpecies.bicolored_fix(lam, mu), lam.z() * mu.z())
        logger.debug("bicolored cycle index at degree %d has %d terms", maxdeg, len(terms))
        return CycleIndex(2, maxdeg, terms)

    @staticmethod
    @lru_cache(maxsize=None)
    def connected_bicolored_ci(maxdeg: int) -> CycleIndex:
        return CycleIndexRing.compose(SpeciesAtoms.combinatorial_log(maxdeg),
                                      [GraphSpecies.bicolored_ci(maxdeg) - 1])
