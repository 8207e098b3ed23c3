from dataclasses import dataclass
from typing import Optional, Tuple

from dto.enums.bicolored_property import BicoloredProperty
from dto.enums.graph_property import GraphProperty


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    sorts: int
    description: str
    formula: str  # defining computation, written in the expression grammar where possible
    genuine: bool = True  # False for virtual species (negative coefficients allowed)
    graph_properties: Optional[Tuple[GraphProperty, ...]] = None  # oracle predicate, plain graphs
    bicolored_properties: Optional[Tuple[BicoloredProperty, ...]] = None  # oracle predicate, bicolored graphs
