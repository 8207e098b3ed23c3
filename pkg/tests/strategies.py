"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from dto.cycle_index import CycleIndex
from dto.graph import Graph, edge_pairs
from dto.partition import Partition
from dto.species_ast import (Application, Atom, CatalogName, Composition, Difference, Literal, Negation,
                             Product, Restriction, Sum)
from dto.enums.restriction_kind import RestrictionKind

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def cycle_indices(draw, sorts=1, maxdeg=4, constant=None):
    """Random sparse cycle index; `constant` pins the constant term when given."""
    factor = st.tuples(st.integers(0, sorts - 1), st.integers(1, maxdeg), st.integers(1, 2))
    terms = {}
    for _ in range(draw(st.integers(0, 6))):
        factors = draw(st.lists(factor, min_size=1, max_size=3))
        merged = {}
        for s, k, e in factors:
            merged[(s, k)] = merged.get((s, k), 0) + e
        mon = tuple((s, k, e) for (s, k), e in sorted(merged.items()))
        terms[mon] = draw(coefficients)
    if constant is not None:
        terms[()] = Fraction(constant)
    return CycleIndex(sorts, maxdeg, terms)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    code = draw(st.integers(0, (1 << len(edge_pairs(n))) - 1))
    return Graph.from_code(n, code)


atom_names = st.sampled_from(['X', 'Y', 'E', 'Ep', 'L', 'G', 'Gc', 'K', 'E_2', 'E_0', 'Cyc_4', 'Dih_5', 'GXY'])
catalog_names = st.sampled_from(['P', 'Qc', 'Bc', 'C', 'PsXY'])


def species_asts():
    leaves = st.one_of(
        atom_names.map(Atom),
        catalog_names.map(CatalogName),
        st.fractions(min_value=0, max_value=9, max_denominator=4).map(Literal),
    )

    def extend(children):
        return st.one_of(
            children.map(Negation),
            st.tuples(children, children).map(lambda t: Sum(*t)),
            st.tuples(children, children).map(lambda t: Difference(*t)),
            st.tuples(children, children).map(lambda t: Product(*t)),
            st.tuples(children, children).map(lambda t: Composition(*t)),
            st.tuples(children, st.sampled_from(list(RestrictionKind)), st.integers(0, 5))
            .map(lambda t: Restriction(*t)),
            st.tuples(st.one_of(atom_names.map(Atom), catalog_names.map(CatalogName)),
                      st.lists(children, min_size=1, max_size=2).map(tuple))
            .map(lambda t: Application(*t)),
        )

    return st.recursive(leaves, extend, max_leaves=8)


partitions = st.lists(st.integers(1, 6), max_size=6).map(lambda parts: Partition(tuple(parts)))
