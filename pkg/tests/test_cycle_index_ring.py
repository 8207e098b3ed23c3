from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dto.cycle_index import CycleIndex
from dto.exceptions import ConstantTermError, SortMismatchError, TruncationError
from service.core.cycle_index_ring import CycleIndexRing
from service.species.species_atoms import SpeciesAtoms
from strategies import coefficients, cycle_indices

ring = CycleIndexRing


def x(maxdeg):
    return SpeciesAtoms.x(maxdeg)


@pytest.mark.parametrize("maxdeg", [1, 4, 7])
def test_sets_and_log_are_inverse(maxdeg):
    ep, log = SpeciesAtoms.ep(maxdeg), SpeciesAtoms.combinatorial_log(maxdeg)
    assert ring.compose(ep, [log]) == x(maxdeg)
    assert ring.compose(log, [ep]) == x(maxdeg)


@given(cycle_indices())
def test_compose_with_x_is_identity(f):
    assert ring.compose(f, [x(f.maxdeg)]) == f


@given(cycle_indices(constant=0))
def test_x_composed_with_anything_is_that_thing(g):
    assert ring.compose(x(g.maxdeg), [g]) == g


@given(cycle_indices(sorts=2, constant=0), cycle_indices(sorts=2, constant=0))
def test_sum_composes_into_sum(g, h):
    # (E_2 o (g + h)) = E_2 o g + g h + E_2 o h
    e2 = SpeciesAtoms.e_n(2, 4)
    lhs = ring.compose(e2, [g + h])
    rhs = ring.compose(e2, [g]) + g * h + ring.compose(e2, [h])
    assert lhs == rhs


def test_compose_rejects_inner_constant():
    with pytest.raises(ConstantTermError):
        ring.compose(x(3), [CycleIndex.one(1, 3)])


def test_compose_checks_inner_count():
    with pytest.raises(SortMismatchError):
        ring.compose(x(3), [x(3), x(3)])


@given(cycle_indices(), st.integers(1, 3), st.integers(1, 3))
def test_plethysm_indices_multiply(f, a, b):
    assert ring.plethysm_pk(a, ring.plethysm_pk(b, f)) == ring.plethysm_pk(a * b, f)


@given(cycle_indices(constant=0))
def test_exp_undoes_log1p(f):
    assert ring.exp(ring.log1p(f)) == f + 1


@given(cycle_indices(sorts=2, constant=1))
def test_invert1(f):
    assert ring.invert1(f) * f == CycleIndex.one(2, f.maxdeg)


def test_invert1_needs_unit_constant():
    with pytest.raises(ConstantTermError):
        ring.invert1(x(3))


def test_log_series_extraction():
    log = SpeciesAtoms.combinatorial_log(8)
    assert ring.ogf_series(log).coefficients == {(1,): 1, (2,): -1}
    egf = ring.egf_series(log.truncate(4)).coefficients
    assert egf == {(1,): 1, (2,): Fraction(-1, 2), (3,): Fraction(1, 3), (4,): Fraction(-1, 4)}


def test_counts_of_sets():
    e = SpeciesAtoms.e(5)
    assert [ring.labeled_count(e, [n]) for n in range(6)] == [1] * 6
    assert [ring.unlabeled_count(e, [n]) for n in range(6)] == [1] * 6


def test_extraction_past_truncation_fails():
    with pytest.raises(TruncationError):
        ring.labeled_count(SpeciesAtoms.e(3), [4])
    with pytest.raises(TruncationError):
        ring.unlabeled_count(SpeciesAtoms.e(3), [4])


def test_extraction_degree_count_must_match_sorts():
    with pytest.raises(SortMismatchError):
        ring.egf_coeff(SpeciesAtoms.e(3), [1, 1])


degrees = st.integers(0, 4)


@given(cycle_indices(sorts=2), cycle_indices(sorts=2), degrees, coefficients)
def test_linear_operations_commute_with_truncation(f, g, m, c):
    assert ring.add(f.truncate(m), g.truncate(m)) == ring.add(f, g).truncate(m)
    assert ring.scale(c, f.truncate(m)) == ring.scale(c, f).truncate(m)


@given(cycle_indices(sorts=2), cycle_indices(sorts=2), degrees)
def test_product_commutes_with_truncation(f, g, m):
    assert ring.mul(f.truncate(m), g.truncate(m)) == ring.mul(f, g).truncate(m)


@given(cycle_indices(sorts=2), cycle_indices(constant=0), cycle_indices(constant=0), degrees)
def test_compose_commutes_with_truncation(f, g, h, m):
    truncated_first = ring.compose(f.truncate(m), [g.truncate(m), h.truncate(m)])
    assert truncated_first == ring.compose(f, [g, h]).truncate(m)


@given(cycle_indices(sorts=2, constant=0), degrees)
def test_log1p_and_exp_commute_with_truncation(f, m):
    assert ring.log1p(f.truncate(m)) == ring.log1p(f).truncate(m)
    assert ring.exp(f.truncate(m)) == ring.exp(f).truncate(m)


@given(cycle_indices(constant=1), degrees)
def test_invert1_commutes_with_truncation(f, m):
    assert ring.invert1(f.truncate(m)) == ring.invert1(f).truncate(m)
