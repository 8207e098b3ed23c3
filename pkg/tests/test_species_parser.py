from fractions import Fraction

import pytest
from hypothesis import given, settings

from dto.enums.restriction_kind import RestrictionKind
from dto.exceptions import SpeciesSyntaxError
from dto.species_ast import (Application, Atom, CatalogName, Composition, Difference, Literal, Negation,
                             Product, Restriction, Sum)
from service.expr.species_parser import SpeciesParser, atom_parts
from service.expr.species_printer import SpeciesPrinter
from service.expr.species_tokenizer import END, IDENT, NUMBER, OPERATOR, tokenize
from dto.enums.atom_name import AtomName
from strategies import species_asts

X, Y, E = Atom('X'), Atom('Y'), Atom('E')


def test_tokens_and_positions():
    tokens = tokenize("E_2 o (X*Y) + 3/2")
    assert [(t.kind, t.text, t.position) for t in tokens] == [
        (IDENT, 'E_2', 0), (OPERATOR, 'o', 4), (OPERATOR, '(', 6), (IDENT, 'X', 7), (OPERATOR, '*', 8),
        (IDENT, 'Y', 9), (OPERATOR, ')', 10), (OPERATOR, '+', 12), (NUMBER, '3/2', 14), (END, '', 17)]


def test_o_inside_identifier_is_a_name():
    assert [t.kind for t in tokenize("Dom")][:1] == [IDENT]


def test_atom_parts():
    assert atom_parts('X') == (AtomName.X, None)
    assert atom_parts('Dih_5') == (AtomName.DIH_N, 5)
    assert atom_parts('E_0') == (AtomName.E_N, 0)
    assert atom_parts('Pc') is None


@pytest.mark.parametrize("text, expected", [
    ("X + Y * X", Sum(X, Product(Y, X))),
    ("X - Y - X", Difference(Difference(X, Y), X)),
    ("E o X * Y", Product(Composition(E, X), Y)),
    ("E o L o X", Composition(E, Composition(Atom('L'), X))),
    ("-X * Y", Product(Negation(X), Y)),
    ("-X[2]", Negation(Restriction(X, RestrictionKind.EXACTLY, 2))),
    ("Pc[>=2]", Restriction(CatalogName('Pc'), RestrictionKind.AT_LEAST, 2)),
    ("E_2(X, Y)", Application(Atom('E_2'), (X, Y))),
    ("PsXY(Ep(X), Ep(Y))", Application(CatalogName('PsXY'), (Application(Atom('Ep'), (X,)),
                                                              Application(Atom('Ep'), (Y,))))),
    ("(1 + X) * 3/2", Product(Sum(Literal(Fraction(1)), X), Literal(Fraction(3, 2)))),
    ("((X))", X),
])
def test_parse(text, expected):
    assert SpeciesParser.parse(text) == expected


@pytest.mark.parametrize("text, position", [
    ("X +", 3),
    ("X $ Y", 2),
    ("1/0", 0),
    ("(X", 2),
    ("X Y", 2),
    ("X[1/2]", 2),
    ("E_2(X,", 6),
    ("", 0),
])
def test_syntax_errors_carry_position(text, position):
    with pytest.raises(SpeciesSyntaxError) as info:
        SpeciesParser.parse(text)
    assert info.value.position == position


def test_printer_parenthesizes_binary_nodes():
    assert SpeciesPrinter.to_text(SpeciesParser.parse("E o X * Y + 1/2")) == "(((E o X) * Y) + 1/2)"
    assert SpeciesPrinter.to_text(SpeciesParser.parse("(-X)[>=1]")) == "(-X)[>=1]"


@settings(max_examples=200)
@given(species_asts())
def test_printed_text_parses_back(ast):
    assert SpeciesParser.parse(SpeciesPrinter.to_text(ast)) == ast
