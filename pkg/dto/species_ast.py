from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from dto.enums.restriction_kind import RestrictionKind


@dataclass(frozen=True)
class Atom:
    name: str  # raw identifier, e.g. 'X', 'E_2', 'Dih_5'


@dataclass(frozen=True)
class CatalogName:
    name: str


@dataclass(frozen=True)
class Literal:
    value: Fraction


@dataclass(frozen=True)
class Negation:
    operand: 'SpeciesAst'


@dataclass(frozen=True)
class Sum:
    left: 'SpeciesAst'
    right: 'SpeciesAst'


@dataclass(frozen=True)
class Difference:
    left: 'SpeciesAst'
    right: 'SpeciesAst'


@dataclass(frozen=True)
class Product:
    left: 'SpeciesAst'
    right: 'SpeciesAst'


@dataclass(frozen=True)
class Composition:
    outer: 'SpeciesAst'
    inner: 'SpeciesAst'


@dataclass(frozen=True)
class Restriction:
    operand: 'SpeciesAst'
    kind: RestrictionKind
    n: int


@dataclass(frozen=True)
class Application:
    head: Union[Atom, CatalogName]
    args: Tuple['SpeciesAst', ...]


SpeciesAst = Union[Atom, CatalogName, Literal, Negation, Sum, Difference, Product, Composition, Restriction,
                   Application]
