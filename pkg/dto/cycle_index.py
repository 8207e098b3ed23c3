from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple, Union

from dto.exceptions import SortMismatchError

# (sort, part, exponent) triples sorted by (sort, part); () is the unit monomial
PMonomial = Tuple[Tuple[int, int, int], ...]
Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def monomial_degree(mon: PMonomial) -> int:
    return sum(k * e for _, k, e in mon)


@lru_cache(maxsize=None)
def monomial_mul(a: PMonomial, b: PMonomial) -> PMonomial:
    if not a:
        return b
    if not b:
        return a
    merged = {(s, k): e for s, k, e in a}
    for s, k, e in b:
        merged[(s, k)] = merged.get((s, k), 0) + e
    return tuple((s, k, e) for (s, k), e in sorted(merged.items()))


def make_monomial(factors: Iterable[Tuple[int, int, int]]) -> PMonomial:
    """Canonical monomial from (sort, part, exponent) factors; repeated factors merge."""
    merged: Dict[Tuple[int, int], int] = {}
    for s, k, e in factors:
        if s < 0 or k < 1 or e < 0:
            raise ValueError(f"Invalid power-sum factor: {(s, k, e)}")
        if e:
            merged[(s, k)] = merged.get((s, k), 0) + e
    return tuple((s, k, e) for (s, k), e in sorted(merged.items()))


def monomial_sort_degrees(mon: PMonomial, sorts: int) -> Tuple[int, ...]:
    """Degree of the monomial in each sort separately."""
    degrees = [0] * sorts
    for s, k, e in mon:
        degrees[s] += k * e
    return tuple(degrees)


@dataclass(frozen=True)
class CycleIndex:
    """Truncated sparse series in the power sums p_k[s], exact rational coefficients.

    Stored monomials have total degree <= maxdeg and nonzero coefficients; every
    constructor normalizes the term map, so equal series compare equal.
    """
    sorts: int
    maxdeg: int
    terms: Dict[PMonomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.sorts < 1:
            raise ValueError(f"A cycle index needs at least one sort, got {self.sorts}")
        if self.maxdeg < 0:
            raise ValueError(f"Truncation degree must be nonnegative, got {self.maxdeg}")
        clean = {}
        for mon, coef in self.terms.items():
            if coef == 0 or monomial_degree(mon) > self.maxdeg:
                continue
            if mon and mon[-1][0] >= self.sorts:
                raise SortMismatchError(f"Monomial {mon} uses a sort outside 0..{self.sorts - 1}")
            clean[mon] = Fraction(coef)
        object.__setattr__(self, 'terms', clean)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, sorts: int, maxdeg: int) -> 'CycleIndex':
        return cls(sorts, maxdeg, {})

    @classmethod
    def constant(cls, value: Scalar, sorts: int, maxdeg: int) -> 'CycleIndex':
        return cls(sorts, maxdeg, {(): Fraction(value)})

    @classmethod
    def one(cls, sorts: int, maxdeg: int) -> 'CycleIndex':
        return cls.constant(1, sorts, maxdeg)

    @classmethod
    def power_sum(cls, k: int, sort: int, sorts: int, maxdeg: int) -> 'CycleIndex':
        """The single power sum p_k in the given sort."""
        return cls(sorts, maxdeg, {((sort, k, 1),): Fraction(1)})

    # -- inspection -----------------------------------------------------------

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mon: PMonomial) -> Fraction:
        return self.terms.get(mon, Fraction(0))

    def degree_part(self, m: int) -> 'CycleIndex':
        return CycleIndex(self.sorts, self.maxdeg,
                          {mon: c for mon, c in self.terms.items() if monomial_degree(mon) == m})

    def truncate(self, maxdeg: int) -> 'CycleIndex':
        """Same series seen at a lower truncation degree."""
        return CycleIndex(self.sorts, min(maxdeg, self.maxdeg), self.terms)

    def sorted_terms(self) -> List[Tuple[PMonomial, Fraction]]:
        """Terms in canonical order: total degree, then monomial order."""
        return sorted(self.terms.items(), key=lambda item: (monomial_degree(item[0]), item[0]))

    def agrees_with(self, other: 'CycleIndex') -> bool:
        """Equality up to the smaller of the two truncation degrees."""
        if self.sorts != other.sorts:
            return False
        degree = min(self.maxdeg, other.maxdeg)
        return self.truncate(degree).terms == other.truncate(degree).terms

    # -- linear structure and product ----------------------------------------

    def _check_sorts(self, other: 'CycleIndex'):
        if self.sorts != other.sorts:
            raise SortMismatchError(f"Sort count mismatch: {self.sorts} vs {other.sorts}")

    def _graded(self, maxdeg: int) -> List[Tuple[int, PMonomial, Fraction]]:
        graded = [(monomial_degree(mon), mon, c) for mon, c in self.terms.items()]
        graded = [t for t in graded if t[0] <= maxdeg]
        graded.sort(key=lambda t: t[0])
        return graded

    def __add__(self, other: Union['CycleIndex', Scalar]) -> 'CycleIndex':
        if isinstance(other, (int, Fraction)):
            other = CycleIndex.constant(other, self.sorts, self.maxdeg)
        self._check_sorts(other)
        terms = dict(self.terms)
        for mon, c in other.terms.items():
            terms[mon] = terms.get(mon, 0) + c
        return CycleIndex(self.sorts, min(self.maxdeg, other.maxdeg), terms)

    __radd__ = __add__

    def __neg__(self) -> 'CycleIndex':
        return CycleIndex(self.sorts, self.maxdeg, {mon: -c for mon, c in self.terms.items()})

    def __sub__(self, other: Union['CycleIndex', Scalar]) -> 'CycleIndex':
        return self + (-other)

    def __rsub__(self, other: Scalar) -> 'CycleIndex':
        return (-self) + other

    def __mul__(self, other: Union['CycleIndex', Scalar]) -> 'CycleIndex':
        if isinstance(other, (int, Fraction)):
            factor = Fraction(other)
            return CycleIndex(self.sorts, self.maxdeg, {mon: c * factor for mon, c in self.terms.items()})
        self._check_sorts(other)
        maxdeg = min(self.maxdeg, other.maxdeg)
        left = self._graded(maxdeg)
        right = other._graded(maxdeg)
        acc: Dict[PMonomial, Fraction] = {}
        for da, ma, ca in left:
            for db, mb, cb in right:
                if da + db > maxdeg:
                    break
                mon = monomial_mul(ma, mb)
                acc[mon] = acc.get(mon, 0) + ca * cb
        return CycleIndex(self.sorts, maxdeg, acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'CycleIndex':
        if exponent < 0:
            raise ValueError("Negative powers need CycleIndexRing.invert1")
        result = CycleIndex.one(self.sorts, self.maxdeg)
        for _ in range(exponent):
            result = result * self
        return result
