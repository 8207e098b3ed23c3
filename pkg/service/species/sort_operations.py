from typing import Dict

from dto.cycle_index import CycleIndex, make_monomial
from dto.cycle_index import monomial_degree
from dto.enums.restriction_kind import RestrictionKind
from dto.exceptions import SortMismatchError


class SortOperations:
    """Sort relabeling, sort substitution and degree restriction."""

    @staticmethod
    def sort_inject(f: CycleIndex, sort: int, total_sorts: int) -> CycleIndex:
        """Read a one-sort series as a series in `sort` of a total_sorts-sort ring."""
        if f.sorts != 1:
            raise SortMismatchError(f"Only one-sort series can be injected, got {f.sorts} sorts")
        if not 0 <= sort < total_sorts:
            raise SortMismatchError(f"Unknown sort {sort} for {total_sorts} sorts")
        terms = {tuple((sort, k, e) for _, k, e in mon): c for mon, c in f.terms.items()}
        return CycleIndex(total_sorts, f.maxdeg, terms)

    @staticmethod
    def sort_subst(f: CycleIndex, sort: int, target: int, sign: int = 1) -> CycleIndex:
        """Substitute p_k[sort] -> sign·p_k[target] and drop `sort` from the ring.

        Sorts above the removed one shift down by one. Y := -X on a two-sort series
        is sort_subst(f, 1, 0, -1).
        """
        if not (0 <= sort < f.sorts and 0 <= target < f.sorts) or sort == target:
            raise SortMismatchError(f"Cannot substitute sort {sort} by sort {target} in {f.sorts} sorts")
        if sign not in (1, -1):
            raise ValueError(f"Substitution sign must be +1 or -1, got {sign}")
        if f.sorts == 1:
            raise SortMismatchError("Cannot remove the only sort")

        def renumber(s: int) -> int:
            s = target if s == sort else s
            return s - 1 if s > sort else s

        terms: Dict = {}
        for mon, c in f.terms.items():
            flips = sum(e for s, _, e in mon if s == sort)
            new_mon = make_monomial((renumber(s), k, e) for s, k, e in mon)
            terms[new_mon] = terms.get(new_mon, 0) + c * (sign ** flips)
        return CycleIndex(f.sorts - 1, f.maxdeg, terms)

    @staticmethod
    def restrict(f: CycleIndex, kind: RestrictionKind, n: int) -> CycleIndex:
        """Keep monomials of total degree exactly n, or at least n."""
        if n < 0:
            raise ValueError(f"Restriction bound must be nonnegative, got {n}")
        if kind == RestrictionKind.EXACTLY:
            keep = {mon: c for mon, c in f.terms.items() if monomial_degree(mon) == n}
        else:
            keep = {mon: c for mon, c in f.terms.items() if monomial_degree(mon) >= n}
        return CycleIndex(f.sorts, f.maxdeg, keep)
