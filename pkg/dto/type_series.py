from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Dict, Tuple

from dto.enums.series_kind import SeriesKind


@dataclass(frozen=True)
class TypeSeries:
    """EGF or OGF extracted from a cycle index, one indeterminate per sort.

    For an EGF the coefficient of x^n is the labeled count divided by n!.
    """
    kind: SeriesKind
    sorts: int
    maxdeg: int
    coefficients: Dict[Tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'coefficients',
                           {d: Fraction(c) for d, c in self.coefficients.items() if c != 0})

    def coefficient(self, *degrees: int) -> Fraction:
        return self.coefficients.get(tuple(degrees), Fraction(0))

    def count(self, *degrees: int) -> Fraction:
        """Structure count: labeled for an EGF, unlabeled for an OGF."""
        c = self.coefficient(*degrees)
        if self.kind == SeriesKind.EGF:
            return c * prod(factorial(d) for d in degrees)
        return c

    def is_integral(self) -> bool:
        return all(self.count(*d).denominator == 1 for d in self.coefficients)

    def sorted_items(self):
        return sorted(self.coefficients.items(), key=lambda item: (sum(item[0]), [-d for d in item[0]]))
