import logging
from fractions import Fraction

from dto.cycle_index import CycleIndex, monomial_degree
from service.core.cycle_index_ring import CycleIndexRing
from service.species.species_atoms import SpeciesAtoms

logger = logging.getLogger(__name__)


def _up_to(f: CycleIndex, n: int) -> CycleIndex:
    """Low-degree part of f, keeping f's truncation degree."""
    return CycleIndex(f.sorts, f.maxdeg, {mon: c for mon, c in f.terms.items() if monomial_degree(mon) <= n})


class FixedPointSolver:
    """Solves species equations of the form F = Φ(F) one degree at a time."""

    @staticmethod
    def rooted_trees(maxdeg: int) -> CycleIndex:
        """A^r = X·E(A^r); the degree-n part only reads degrees below n."""
        x = SpeciesAtoms.x(maxdeg)
        e = SpeciesAtoms.e(maxdeg)
        current = CycleIndex.zero(1, maxdeg)
        for n in range(1, maxdeg + 1):
            current = _up_to(x * CycleIndexRing.compose(e, [current]), n)
            logger.debug("rooted trees solved through degree %d", n)
        return current

    @staticmethod
    def cographs(maxdeg: int) -> CycleIndex:
        """C = E₊((C + X)/2).

        C_n appears on the right only through the linear term of E₊, as C_n/2, so
        C_n = 2·K_n where K_n is the degree-n part computed from C below degree n.
        """
        x = SpeciesAtoms.x(maxdeg)
        ep = SpeciesAtoms.ep(maxdeg)
        current = CycleIndex.zero(1, maxdeg)
        for n in range(1, maxdeg + 1):
            known = CycleIndexRing.compose(ep, [(current + x) * Fraction(1, 2)])
            current = current + known.degree_part(n) * 2
            logger.debug("cographs solved through degree %d", n)
        return current
