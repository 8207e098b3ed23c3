import logging
from fractions import Fraction
from functools import lru_cache

from dto.cycle_index import CycleIndex, PMonomial
from dto.exceptions import InvalidAtomError
from dto.partition import Partition
from service.core.cycle_index_ring import CycleIndexRing
from util.number_utils import divisors, mobius, partitions_of, totient

logger = logging.getLogger(__name__)


def partition_monomial(partition: Partition, sort: int = 0) -> PMonomial:
    """p_λ in the given sort."""
    return tuple((sort, k, c) for k, c in sorted(partition.multiplicities.items()))


class SpeciesAtoms:
    """One-sort cycle indices of the elementary species."""

    @staticmethod
    def x(maxdeg: int) -> CycleIndex:
        return CycleIndex.power_sum(1, 0, 1, maxdeg)

    @staticmethod
    @lru_cache(maxsize=None)
    def e_n(n: int, maxdeg: int) -> CycleIndex:
        """Sets of size n: Σ_{λ⊢n} p_λ / z_λ."""
        if n < 0:
            raise InvalidAtomError(f"E_n needs n >= 0, got {n}")
        if n > maxdeg:
            return CycleIndex.zero(1, maxdeg)
        terms = {partition_monomial(lam): Fraction(1, lam.z()) for lam in partitions_of(n)}
        return CycleIndex(1, maxdeg, terms)

    @staticmethod
    @lru_cache(maxsize=None)
    def e(maxdeg: int) -> CycleIndex:
        """Sets of every size up to maxdeg."""
        result = CycleIndex.zero(1, maxdeg)
        for n in range(maxdeg + 1):
            result = result + SpeciesAtoms.e_n(n, maxdeg)
        return result

    @staticmethod
    def ep(maxdeg: int) -> CycleIndex:
        return SpeciesAtoms.e(maxdeg) - 1

    @staticmethod
    @lru_cache(maxsize=None)
    def combinatorial_log(maxdeg: int) -> CycleIndex:
        """(1+X)^c = Σ_k μ(k)/k · log(1 + p_k)."""
        log_p1 = CycleIndexRing.log1p(SpeciesAtoms.x(maxdeg))
        result = CycleIndex.zero(1, maxdeg)
        for k in range(1, maxdeg + 1):
            mu = mobius(k)
            if mu:
                result = result + CycleIndexRing.plethysm_pk(k, log_p1) * Fraction(mu, k)
        logger.debug("combinatorial log materialized at degree %d (%d terms)", maxdeg, len(result.terms))
        return result

    @staticmethod
    def cyclic(n: int, maxdeg: int) -> CycleIndex:
        """Oriented n-cycles: (1/n) Σ_{d|n} φ(d) p_d^{n/d}."""
        if n < 1:
            raise InvalidAtomError(f"Cyc_n needs n >= 1, got {n}")
        if n > maxdeg:
            return CycleIndex.zero(1, maxdeg)
        terms = {((0, d, n // d),): Fraction(totient(d), n) for d in divisors(n)}
        return CycleIndex(1, maxdeg, terms)

    @staticmethod
    def dihedral(n: int, maxdeg: int) -> CycleIndex:
        """Unoriented n-gons: rotations plus reflections, averaged over 2n."""
        if n < 3:
            raise InvalidAtomError(f"Dih_n needs n >= 3, got {n}")
        if n > maxdeg:
            return CycleIndex.zero(1, maxdeg)
        terms = {((0, d, n // d),): Fraction(totient(d)) for d in divisors(n)}
        if n % 2 == 1:
            reflections = {((0, 1, 1), (0, 2, (n - 1) // 2)): Fraction(n)}
        else:
            reflections = {((0, 1, 2), (0, 2, (n - 2) // 2)): Fraction(n, 2),
                           ((0, 2, n // 2),): Fraction(n, 2)}
        for mon, c in reflections.items():
            terms[mon] = terms.get(mon, 0) + c
        return CycleIndex(1, maxdeg, {mon: c / (2 * n) for mon, c in terms.items()})
