from fractions import Fraction
from math import factorial

import pytest

from dto.atom_spec import AtomSpec
from dto.cycle_index import CycleIndex
from dto.enums.atom_name import AtomName
from dto.exceptions import InvalidAtomError, SortMismatchError
from dto.partition import Partition
from service.core.cycle_index_ring import CycleIndexRing
from service.species.atom_factory import AtomFactory
from service.species.graph_species import GraphSpecies
from service.species.species_atoms import SpeciesAtoms

ring = CycleIndexRing


def test_two_element_sets():
    assert SpeciesAtoms.e_n(2, 4).terms == {((0, 1, 2),): Fraction(1, 2), ((0, 2, 1),): Fraction(1, 2)}


@pytest.mark.parametrize("n", range(7))
def test_one_labeled_set_per_size(n):
    assert ring.labeled_count(SpeciesAtoms.e_n(n, 6), [n]) == 1


def test_nonempty_sets_drop_the_constant():
    assert SpeciesAtoms.ep(4).constant_term == 0
    assert SpeciesAtoms.ep(4) + 1 == SpeciesAtoms.e(4)


@pytest.mark.parametrize("n, labeled", [(3, 1), (4, 3), (5, 12), (6, 60)])
def test_dihedral_counts(n, labeled):
    d = SpeciesAtoms.dihedral(n, 6)
    assert ring.labeled_count(d, [n]) == labeled
    assert ring.unlabeled_count(d, [n]) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_cyclic_counts(n):
    c = SpeciesAtoms.cyclic(n, 6)
    assert ring.labeled_count(c, [n]) == factorial(n - 1)
    assert ring.unlabeled_count(c, [n]) == 1


def test_dihedral_square():
    d = SpeciesAtoms.dihedral(4, 4)
    assert d.terms == {((0, 1, 4),): Fraction(1, 8), ((0, 1, 2), (0, 2, 1)): Fraction(1, 4),
                       ((0, 2, 2),): Fraction(3, 8), ((0, 4, 1),): Fraction(1, 4)}


@pytest.mark.parametrize("build", [lambda: SpeciesAtoms.e_n(-1, 3), lambda: SpeciesAtoms.cyclic(0, 3),
                                   lambda: SpeciesAtoms.dihedral(2, 3)])
def test_invalid_parameters(build):
    with pytest.raises(InvalidAtomError):
        build()


def test_combinatorial_log_type_series():
    assert ring.ogf_series(SpeciesAtoms.combinatorial_log(6)).coefficients == {(1,): 1, (2,): -1}


@pytest.mark.parametrize("parts, fixed", [((1, 1), 2), ((2,), 2), ((1, 1, 1), 8), ((3,), 2), ((2, 2), 16)])
def test_graphs_fix(parts, fixed):
    assert GraphSpecies.graphs_fix(Partition(parts)) == fixed


def test_graphs_degree_two_part():
    assert GraphSpecies.graphs_ci(4).degree_part(2).terms == {((0, 1, 2),): 1, ((0, 2, 1),): 1}


@pytest.mark.parametrize("n", range(7))
def test_labeled_graphs(n):
    assert ring.labeled_count(GraphSpecies.graphs_ci(6), [n]) == 2 ** (n * (n - 1) // 2)


def test_unlabeled_graphs():
    g = GraphSpecies.graphs_ci(6)
    assert [ring.unlabeled_count(g, [n]) for n in range(7)] == [1, 1, 2, 4, 11, 34, 156]


def test_connected_graphs():
    gc = GraphSpecies.connected_graphs_ci(5)
    assert [ring.labeled_count(gc, [n]) for n in range(6)] == [0, 1, 1, 4, 38, 728]
    assert [ring.unlabeled_count(gc, [n]) for n in range(6)] == [0, 1, 1, 2, 6, 21]


def test_bicolored_fix():
    assert GraphSpecies.bicolored_fix(Partition((1,)), Partition((1,))) == 2
    assert GraphSpecies.bicolored_fix(Partition((2,)), Partition((2,))) == 4


def test_bicolored_labeled_counts():
    b = GraphSpecies.bicolored_ci(8)
    assert all(ring.labeled_count(b, [m, n]) == 2 ** (m * n) for m in range(5) for n in range(5))
    assert b.coefficient(((0, 1, 1), (1, 1, 1))) == 2


def test_bicolored_single_color_part_is_sets():
    b = GraphSpecies.bicolored_ci(5)
    white_only = {mon: c for mon, c in b.terms.items() if all(s == 0 for s, _, _ in mon)}
    assert CycleIndex(1, 5, white_only) == SpeciesAtoms.e(5)


def test_connected_bicolored():
    gc = GraphSpecies.connected_bicolored_ci(4)
    assert ring.labeled_count(gc, [2, 2]) == 5
    assert ring.unlabeled_count(gc, [2, 2]) == 2
    assert ring.unlabeled_count(gc, [1, 0]) == 1


def test_atom_factory_places_atoms_in_sorts():
    y = AtomFactory.atom(AtomSpec(AtomName.Y, sorts=2), 3)
    assert y.terms == {((1, 1, 1),): 1}
    e2 = AtomFactory.atom(AtomSpec(AtomName.E_N, 2, sort=1, sorts=2), 3)
    assert e2.terms == {((1, 1, 2),): Fraction(1, 2), ((1, 2, 1),): Fraction(1, 2)}
    assert AtomFactory.atom(AtomSpec(AtomName.K), 3) == SpeciesAtoms.e(3)


def test_atom_factory_errors():
    with pytest.raises(InvalidAtomError):
        AtomFactory.atom(AtomSpec(AtomName.E_N), 3)
    with pytest.raises(InvalidAtomError):
        AtomFactory.atom(AtomSpec(AtomName.X, 2), 3)
    with pytest.raises(SortMismatchError):
        AtomFactory.atom(AtomSpec(AtomName.Y), 3)
    with pytest.raises(SortMismatchError):
        AtomFactory.atom(AtomSpec(AtomName.GXY), 3)


@pytest.mark.parametrize("atom", [SpeciesAtoms.e_n, SpeciesAtoms.cyclic, SpeciesAtoms.dihedral])
def test_atoms_of_size_past_the_degree_vanish(atom):
    assert atom(80, 4) == CycleIndex.zero(1, 4)
