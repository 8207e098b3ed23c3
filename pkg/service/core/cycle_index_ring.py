import logging
from fractions import Fraction
from math import factorial
from typing import Dict, Sequence, Tuple

from dto.cycle_index import CycleIndex, PMonomial, monomial_degree, monomial_sort_degrees
from dto.enums.series_kind import SeriesKind
from dto.exceptions import ConstantTermError, NonIntegralCountError, SortMismatchError, TruncationError
from dto.type_series import TypeSeries

logger = logging.getLogger(__name__)


class CycleIndexRing:
    """Exact operations on truncated multisort cycle indices."""

    @staticmethod
    def add(f: CycleIndex, g: CycleIndex) -> CycleIndex:
        return f + g

    @staticmethod
    def scale(c: Fraction, f: CycleIndex) -> CycleIndex:
        return f * Fraction(c)

    @staticmethod
    def mul(f: CycleIndex, g: CycleIndex) -> CycleIndex:
        return f * g

    @staticmethod
    def plethysm_pk(k: int, f: CycleIndex) -> CycleIndex:
        """Replace every p_j[s] by p_{jk}[s]; terms pushed past maxdeg are dropped."""
        if k < 1:
            raise ValueError(f"Plethysm index must be positive, got {k}")
        if k == 1:
            return f
        terms = {}
        for mon, c in f.terms.items():
            if monomial_degree(mon) * k <= f.maxdeg:
                terms[tuple((s, j * k, e) for s, j, e in mon)] = c
        return CycleIndex(f.sorts, f.maxdeg, terms)

    @classmethod
    def compose(cls, outer: CycleIndex, inners: Sequence[CycleIndex]) -> CycleIndex:
        """Substitute p_k[s] -> p_k ∘ inners[s] in outer and expand.

        Args:
            outer: Series whose sorts are being substituted.
            inners: One series per sort of outer, sharing a sort count.

        Returns:
            The composite, truncated at the smallest truncation degree involved.

        Raises:
            SortMismatchError: If the inner count or inner sort counts disagree.
            ConstantTermError: If an inner series has a nonzero constant term.
        """
        if len(inners) != outer.sorts:
            raise SortMismatchError(f"Composition needs {outer.sorts} inner series, got {len(inners)}")
        target_sorts = inners[0].sorts
        for inner in inners:
            if inner.sorts != target_sorts:
                raise SortMismatchError("Inner series of a composition must share a sort count")
            if inner.constant_term != 0:
                raise ConstantTermError(f"Inner series has constant term {inner.constant_term}")
        maxdeg = min([outer.maxdeg] + [inner.maxdeg for inner in inners])
        logger.debug("compose: %d outer terms into %d sorts at degree %d", len(outer.terms), target_sorts, maxdeg)

        powers: Dict[Tuple[int, int, int], CycleIndex] = {}

        def factor_power(s: int, k: int, e: int) -> CycleIndex:
            key = (s, k, e)
            if key not in powers:
                if e == 1:
                    powers[key] = cls.plethysm_pk(k, inners[s].truncate(maxdeg))
                else:
                    powers[key] = factor_power(s, k, e - 1) * factor_power(s, k, 1)
            return powers[key]

        # partial products memoized by monomial prefix
        prefixes: Dict[PMonomial, CycleIndex] = {(): CycleIndex.one(target_sorts, maxdeg)}

        def partial_product(mon: PMonomial) -> CycleIndex:
            if mon not in prefixes:
                prefixes[mon] = partial_product(mon[:-1]) * factor_power(*mon[-1])
            return prefixes[mon]

        acc: Dict[PMonomial, Fraction] = {}
        for mon, coef in outer.terms.items():
            # inner series start in degree >= 1, so outer degree bounds the result degree
            if monomial_degree(mon) > maxdeg:
                continue
            term = partial_product(mon)
            for m, c in term.terms.items():
                acc[m] = acc.get(m, 0) + coef * c
        return CycleIndex(target_sorts, maxdeg, acc)

    @classmethod
    def log1p(cls, f: CycleIndex) -> CycleIndex:
        """log(1+f) = Σ (-1)^{m+1} f^m / m, truncated."""
        if f.constant_term != 0:
            raise ConstantTermError("log1p needs a series without constant term")
        result = CycleIndex.zero(f.sorts, f.maxdeg)
        power = f
        for m in range(1, f.maxdeg + 1):
            if power.is_zero():
                break
            sign = 1 if m % 2 == 1 else -1
            result = result + power * Fraction(sign, m)
            power = power * f
        return result

    @classmethod
    def exp(cls, f: CycleIndex) -> CycleIndex:
        """Plain exponential Σ f^m / m!, the inverse of log1p."""
        if f.constant_term != 0:
            raise ConstantTermError("exp needs a series without constant term")
        result = CycleIndex.one(f.sorts, f.maxdeg)
        power = CycleIndex.one(f.sorts, f.maxdeg)
        for m in range(1, f.maxdeg + 1):
            power = power * f
            if power.is_zero():
                break
            result = result + power * Fraction(1, factorial(m))
        return result

    @classmethod
    def invert1(cls, f: CycleIndex) -> CycleIndex:
        """Multiplicative inverse of a series with constant term 1."""
        if f.constant_term != 1:
            raise ConstantTermError(f"invert1 needs constant term 1, got {f.constant_term}")
        h = f - 1
        result = CycleIndex.one(f.sorts, f.maxdeg)
        power = CycleIndex.one(f.sorts, f.maxdeg)
        for _ in range(f.maxdeg):
            power = power * (-h)
            if power.is_zero():
                break
            result = result + power
        return result

    @staticmethod
    def egf_coeff(f: CycleIndex, degrees: Sequence[int]) -> Fraction:
        """Coefficient of Π_s p_1[s]^{n_s}."""
        if len(degrees) != f.sorts:
            raise SortMismatchError(f"Expected {f.sorts} degrees, got {len(degrees)}")
        if any(n < 0 for n in degrees):
            raise ValueError(f"Degrees must be nonnegative: {list(degrees)}")
        if sum(degrees) > f.maxdeg:
            raise TruncationError(f"Degree {sum(degrees)} exceeds truncation degree {f.maxdeg}")
        mon = tuple((s, 1, n) for s, n in enumerate(degrees) if n > 0)
        return f.coefficient(mon)

    @classmethod
    def labeled_count(cls, f: CycleIndex, degrees: Sequence[int]) -> int:
        count = cls.egf_coeff(f, degrees)
        for n in degrees:
            count *= factorial(n)
        if count.denominator != 1:
            raise NonIntegralCountError(f"Labeled count {count} at {list(degrees)} is not an integer")
        return int(count)

    @staticmethod
    def ogf_series(f: CycleIndex) -> TypeSeries:
        """Substitute p_k[s] -> t_s^k and collect."""
        acc: Dict[Tuple[int, ...], Fraction] = {}
        for mon, c in f.terms.items():
            key = monomial_sort_degrees(mon, f.sorts)
            acc[key] = acc.get(key, 0) + c
        return TypeSeries(SeriesKind.OGF, f.sorts, f.maxdeg, acc)

    @staticmethod
    def egf_series(f: CycleIndex) -> TypeSeries:
        """Keep only the Π p_1[s]^{n_s} terms, read as Σ c x^n."""
        acc = {}
        for mon, c in f.terms.items():
            if all(k == 1 for _, k, _ in mon):
                acc[monomial_sort_degrees(mon, f.sorts)] = c
        return TypeSeries(SeriesKind.EGF, f.sorts, f.maxdeg, acc)

    @classmethod
    def unlabeled_count(cls, f: CycleIndex, degrees: Sequence[int]) -> int:
        if len(degrees) != f.sorts:
            raise SortMismatchError(f"Expected {f.sorts} degrees, got {len(degrees)}")
        if sum(degrees) > f.maxdeg:
            raise TruncationError(f"Degree {sum(degrees)} exceeds truncation degree {f.maxdeg}")
        count = cls.ogf_series(f).coefficient(*degrees)
        if count.denominator != 1:
            raise NonIntegralCountError(f"Unlabeled count {count} at {list(degrees)} is not an integer")
        return int(count)

