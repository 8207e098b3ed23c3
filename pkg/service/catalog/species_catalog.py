import logging
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List

from dto.catalog_entry import CatalogEntry
from dto.cycle_index import CycleIndex
from dto.enums.bicolored_property import BicoloredProperty as BP
from dto.enums.graph_property import GraphProperty as GP
from dto.exceptions import UnknownSpeciesError
from service.catalog.fixed_point_solver import FixedPointSolver
from service.core.cycle_index_ring import CycleIndexRing
from service.species.graph_species import GraphSpecies
from service.species.sort_operations import SortOperations
from service.species.species_atoms import SpeciesAtoms

logger = logging.getLogger(__name__)

compose = CycleIndexRing.compose
inject = SortOperations.sort_inject


class SpeciesCatalog:
    """Named graph species, each computed from its defining species formula."""

    ENTRIES: Dict[str, CatalogEntry] = {e.name: e for e in [
        CatalogEntry('G', 1, "graphs", "G", graph_properties=()),
        CatalogEntry('Gc', 1, "connected graphs", "L o (G - 1)", graph_properties=(GP.CONNECTED,)),
        CatalogEntry('E', 1, "sets", "E"),
        CatalogEntry('L', 1, "combinatorial logarithm (1+X)^c", "L", genuine=False),
        CatalogEntry('P', 1, "point-determining graphs", "G o L", graph_properties=(GP.PD,)),
        CatalogEntry('Q', 1, "co-point-determining graphs", "G o L", graph_properties=(GP.CO_PD,)),
        CatalogEntry('Qc', 1, "connected co-point-determining graphs", "Gc o L",
                     graph_properties=(GP.CONNECTED, GP.CO_PD)),
        CatalogEntry('Pc', 1, "connected point-determining graphs", "X + Qc - L",
                     graph_properties=(GP.CONNECTED, GP.PD)),
        CatalogEntry('Mc', 1, "connected endpoint-free graphs", "Gc o (X * (E o (-X))) + E_2 o (-X)",
                     graph_properties=(GP.CONNECTED, GP.ENDPOINT_FREE)),
        CatalogEntry('M', 1, "endpoint-free graphs", "E o Mc", graph_properties=(GP.ENDPOINT_FREE,)),
        CatalogEntry('McAlt', 1, "connected endpoint-free graphs through trees",
                     "X + (Gc - A) o (X * (E o (-X)))", graph_properties=(GP.CONNECTED, GP.ENDPOINT_FREE)),
        CatalogEntry('Ar', 1, "rooted trees", "fixed point of X * (E o Ar)"),
        CatalogEntry('A', 1, "trees", "Ar + E_2 o Ar - Ar * Ar", graph_properties=(GP.CONNECTED, GP.ACYCLIC)),
        CatalogEntry('C', 1, "cographs", "fixed point of Ep o (1/2 * (C + X))", graph_properties=(GP.COGRAPH,)),
        CatalogEntry('Cc', 1, "connected cographs", "1/2 * (C + X)", graph_properties=(GP.CONNECTED, GP.COGRAPH)),
        CatalogEntry('B', 1, "bi-point-determining graphs", "G o (2*L - X)", graph_properties=(GP.BIPD,)),
        CatalogEntry('Bc', 1, "connected bi-point-determining graphs", "Gc o (2*L - X) - L + X",
                     graph_properties=(GP.CONNECTED, GP.BIPD)),
        CatalogEntry('GXY', 2, "bicolored graphs", "GXY", bicolored_properties=(BP.ANY,)),
        CatalogEntry('GcXY', 2, "connected bicolored graphs", "L o (GXY - 1)", bicolored_properties=(BP.CONNECTED,)),
        CatalogEntry('PsXY', 2, "semi-point-determining bicolored graphs", "GXY(L(X), L(Y))",
                     bicolored_properties=(BP.SEMI_PD,)),
        CatalogEntry('Pc2XY', 2, "connected point-determining bicolored graphs on two or more vertices",
                     "L o (PsXY / ((1 + X)(1 + Y)) - 1)"),
        CatalogEntry('PcXY', 2, "connected point-determining bicolored graphs", "X + Y + Pc2XY",
                     bicolored_properties=(BP.CONNECTED, BP.PD)),
        CatalogEntry('PXY', 2, "point-determining bicolored graphs", "(1 + X + Y) * (E o Pc2XY)",
                     bicolored_properties=(BP.PD,)),
        CatalogEntry('HXXY', 2, "endpoint species H evaluated at (X, X + Y)", "Gc o (X * (E o Y)) + E_2 o Y",
                     genuine=False),
    ]}

    @staticmethod
    def entry(name: str) -> CatalogEntry:
        if name not in SpeciesCatalog.ENTRIES:
            raise UnknownSpeciesError(f"Unknown species: {name}")
        return SpeciesCatalog.ENTRIES[name]

    @staticmethod
    def names() -> List[str]:
        return list(SpeciesCatalog.ENTRIES)

    @staticmethod
    @lru_cache(maxsize=None)
    def species_ci(name: str, maxdeg: int) -> CycleIndex:
        """Cycle index of a catalog species truncated at maxdeg.

        Args:
            name: Catalog identifier, e.g. 'P', 'Bc' or 'PXY'.
            maxdeg: Truncation degree (total degree for two-sort species).

        Returns:
            The exact cycle index.

        Raises:
            UnknownSpeciesError: If the name is not in the catalog.
        """
        SpeciesCatalog.entry(name)
        if maxdeg < 0:
            raise ValueError(f"Truncation degree must be nonnegative, got {maxdeg}")
        result = _BUILDERS[name](maxdeg)
        logger.info("computed %s at degree %d (%d terms)", name, maxdeg, len(result.terms))
        return result


def _ci(name: str, maxdeg: int) -> CycleIndex:
    return SpeciesCatalog.species_ci(name, maxdeg)


def _x(maxdeg: int) -> CycleIndex:
    return SpeciesAtoms.x(maxdeg)


def _rooted_tree_inverse(maxdeg: int) -> CycleIndex:
    """X·E(-X), the compositional inverse of rooted trees."""
    return _x(maxdeg) * compose(SpeciesAtoms.e(maxdeg), [-_x(maxdeg)])


def _two_l_minus_x(maxdeg: int) -> CycleIndex:
    """2L - X, the compositional inverse of cographs."""
    return SpeciesAtoms.combinatorial_log(maxdeg) * 2 - _x(maxdeg)


def _endpoint_free_connected(d: int) -> CycleIndex:
    minus_x = -_x(d)
    return (compose(GraphSpecies.connected_graphs_ci(d), [_rooted_tree_inverse(d)])
            + compose(SpeciesAtoms.e_n(2, d), [minus_x]))


def _endpoint_free_connected_alt(d: int) -> CycleIndex:
    outer = GraphSpecies.connected_graphs_ci(d) - _ci('A', d)
    return _x(d) + compose(outer, [_rooted_tree_inverse(d)])


def _trees(d: int) -> CycleIndex:
    rooted = _ci('Ar', d)
    return rooted + compose(SpeciesAtoms.e_n(2, d), [rooted]) - rooted * rooted


def _connected_bipd(d: int) -> CycleIndex:
    log = SpeciesAtoms.combinatorial_log(d)
    return compose(GraphSpecies.connected_graphs_ci(d), [_two_l_minus_x(d)]) - log + _x(d)


def _xy(d: int):
    return CycleIndex.power_sum(1, 0, 2, d), CycleIndex.power_sum(1, 1, 2, d)


def _semi_pd_bicolored(d: int) -> CycleIndex:
    log = SpeciesAtoms.combinatorial_log(d)
    return compose(GraphSpecies.bicolored_ci(d), [inject(log, 0, 2), inject(log, 1, 2)])


def _connected_pd_bicolored_large(d: int) -> CycleIndex:
    x, y = _xy(d)
    sets_of_components = _ci('PsXY', d) * CycleIndexRing.invert1((1 + x) * (1 + y))
    return compose(SpeciesAtoms.combinatorial_log(d), [sets_of_components - 1])


def _connected_pd_bicolored(d: int) -> CycleIndex:
    x, y = _xy(d)
    return x + y + _ci('Pc2XY', d)


def _pd_bicolored(d: int) -> CycleIndex:
    x, y = _xy(d)
    return (1 + x + y) * compose(SpeciesAtoms.e(d), [_ci('Pc2XY', d)])


def _endpoint_at_x_plus_y(d: int) -> CycleIndex:
    x, _ = _xy(d)
    sets_y = inject(SpeciesAtoms.e(d), 1, 2)
    return compose(GraphSpecies.connected_graphs_ci(d), [x * sets_y]) + inject(SpeciesAtoms.e_n(2, d), 1, 2)


_BUILDERS: Dict[str, Callable[[int], CycleIndex]] = {
    'G': GraphSpecies.graphs_ci,
    'Gc': GraphSpecies.connected_graphs_ci,
    'E': SpeciesAtoms.e,
    'L': SpeciesAtoms.combinatorial_log,
    'P': lambda d: compose(GraphSpecies.graphs_ci(d), [SpeciesAtoms.combinatorial_log(d)]),
    'Q': lambda d: _ci('P', d),
    'Qc': lambda d: compose(GraphSpecies.connected_graphs_ci(d), [SpeciesAtoms.combinatorial_log(d)]),
    'Pc': lambda d: _x(d) + _ci('Qc', d) - SpeciesAtoms.combinatorial_log(d),
    'Mc': _endpoint_free_connected,
    'M': lambda d: compose(SpeciesAtoms.e(d), [_ci('Mc', d)]),
    'McAlt': _endpoint_free_connected_alt,
    'Ar': FixedPointSolver.rooted_trees,
    'A': _trees,
    'C': FixedPointSolver.cographs,
    'Cc': lambda d: (_ci('C', d) + _x(d)) * Fraction(1, 2),
    'B': lambda d: compose(GraphSpecies.graphs_ci(d), [_two_l_minus_x(d)]),
    'Bc': _connected_bipd,
    'GXY': GraphSpecies.bicolored_ci,
    'GcXY': GraphSpecies.connected_bicolored_ci,
    'PsXY': _semi_pd_bicolored,
    'Pc2XY': _connected_pd_bicolored_large,
    'PcXY': _connected_pd_bicolored,
    'PXY': _pd_bicolored,
    'HXXY': _endpoint_at_x_plus_y,
}
