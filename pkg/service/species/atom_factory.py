from dto.atom_spec import AtomSpec
from dto.cycle_index import CycleIndex
from dto.enums.atom_name import AtomName
from dto.exceptions import InvalidAtomError, SortMismatchError
from service.species.graph_species import GraphSpecies
from service.species.sort_operations import SortOperations
from service.species.species_atoms import SpeciesAtoms

TWO_SORT_ATOMS = (AtomName.GXY, AtomName.GCXY)
PARAMETRIZED_ATOMS = (AtomName.E_N, AtomName.CYC_N, AtomName.DIH_N)


class AtomFactory:
    """Builds the cycle index of an atom and places it in its sort."""

    @staticmethod
    def one_sort(name: AtomName, param: int, maxdeg: int) -> CycleIndex:
        if name in (AtomName.X, AtomName.Y):
            return SpeciesAtoms.x(maxdeg)
        if name == AtomName.ONE:
            return CycleIndex.one(1, maxdeg)
        if name == AtomName.ZERO:
            return CycleIndex.zero(1, maxdeg)
        # complete graphs and sets share a cycle index
        if name in (AtomName.E, AtomName.K):
            return SpeciesAtoms.e(maxdeg)
        if name in (AtomName.EP, AtomName.KP):
            return SpeciesAtoms.ep(maxdeg)
        if name == AtomName.E_N:
            return SpeciesAtoms.e_n(param, maxdeg)
        if name == AtomName.L:
            return SpeciesAtoms.combinatorial_log(maxdeg)
        if name == AtomName.CYC_N:
            return SpeciesAtoms.cyclic(param, maxdeg)
        if name == AtomName.DIH_N:
            return SpeciesAtoms.dihedral(param, maxdeg)
        if name == AtomName.G:
            return GraphSpecies.graphs_ci(maxdeg)
        if name == AtomName.GC:
            return GraphSpecies.connected_graphs_ci(maxdeg)
        raise InvalidAtomError(f"{name.value} is not a one-sort atom")

    @classmethod
    def atom(cls, spec: AtomSpec, maxdeg: int) -> CycleIndex:
        """Cycle index of the atom described by spec, truncated at maxdeg.

        Args:
            spec: Atom name, optional parameter and target sort.
            maxdeg: Truncation degree.

        Returns:
            A spec.sorts-sort cycle index.

        Raises:
            InvalidAtomError: If the parameter is missing or out of range.
            SortMismatchError: If the atom cannot live in the requested sorts.
        """
        if maxdeg < 0:
            raise ValueError(f"Truncation degree must be nonnegative, got {maxdeg}")
        if (spec.name in PARAMETRIZED_ATOMS) != (spec.param is not None):
            raise InvalidAtomError(f"Atom {spec.name.value} got parameter {spec.param}")

        if spec.name in TWO_SORT_ATOMS:
            if spec.sorts != 2:
                raise SortMismatchError(f"{spec.name.value} is a two-sort species")
            if spec.name == AtomName.GXY:
                return GraphSpecies.bicolored_ci(maxdeg)
            return GraphSpecies.connected_bicolored_ci(maxdeg)

        sort = 1 if spec.name == AtomName.Y else spec.sort
        if spec.name == AtomName.Y and spec.sorts < 2:
            raise SortMismatchError("Y needs a two-sort context")
        f = cls.one_sort(spec.name, spec.param, maxdeg)
        if spec.sorts == 1 and sort == 0:
            return f
        return SortOperations.sort_inject(f, sort, spec.sorts)
