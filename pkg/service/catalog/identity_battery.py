import logging
from dataclasses import dataclass
from typing import List

from dto.check_result import CheckResult
from dto.cycle_index import CycleIndex
from dto.enums.series_kind import SeriesKind
from dto.enums.verify_suite import VerifySuite
from service.catalog.species_catalog import SpeciesCatalog
from service.core.cycle_index_ring import CycleIndexRing
from service.expr.species_evaluator import SpeciesEvaluator
from service.species.sort_operations import SortOperations
from util.cycle_index_text import format_cycle_index

logger = logging.getLogger(__name__)

SUITE = VerifySuite.IDENTITIES.value


@dataclass(frozen=True)
class Identity:
    tag: str
    lhs: str
    rhs: str
    compare: SeriesKind = SeriesKind.CYCLE_INDEX
    source: str = ""


class IdentityBattery:
    """Species identities checked as exact equalities up to the truncation degree."""

    IDENTITIES: List[Identity] = [
        Identity('sets-after-log', "Ep o L", "X",
                 source="(1+X)^c is the compositional inverse of nonempty sets"),
        Identity('log-after-sets', "L o Ep", "X",
                 source="(1+X)^c is the compositional inverse of nonempty sets"),
        Identity('graphs-over-sets', "G", "P o Ep",
                 source="a graph is a point-determining graph whose vertices are blown up into nonempty sets"),
        Identity('pd-from-connected-pd', "P", "(1 + X) * (E o Pc[>=2])",
                 source="point-determining graphs have at most one isolated vertex beside larger connected components"),
        Identity('pd-from-connected-copd', "P", "E o Qc",
                 source="point-determining graphs are sets of connected co-point-determining graphs, by complement"),
        Identity('log-from-connected', "Qc - Pc[>=2]", "L",
                 source="(1+X)^c is connected co-pd graphs minus connected pd graphs on two or more vertices"),
        Identity('connected-difference-ogf', "Qc - Pc", "-X * X", SeriesKind.OGF,
                 source="unlabeled connected co-pd and pd graphs differ only on two vertices"),
        Identity('connected-difference-egf', "Qc - Pc", "L - X", SeriesKind.EGF,
                 source="labeled connected co-pd minus pd graphs is the exponential series of (1+X)^c - X"),
        Identity('endpoint-free-ogf', "M", "Q", SeriesKind.OGF,
                 source="unlabeled graphs without endpoints are equinumerous with unlabeled co-pd graphs"),
        Identity('endpoint-free-connected-ogf', "Mc", "Qc", SeriesKind.OGF,
                 source="the connected form of the endpoint-free and co-pd equinumerosity"),
        Identity('endpoint-free-through-trees', "Mc", "McAlt",
                 source="connected graphs without endpoints from connected graphs, trees and rooted trees"),
        Identity('cograph-inverse-left', "C o (2*L - X)", "X",
                 source="the compositional inverse of cographs is 2(1+X)^c - X"),
        Identity('cograph-inverse-right', "(2*L - X) o C", "X",
                 source="the compositional inverse of cographs is 2(1+X)^c - X"),
        Identity('graphs-over-cographs', "G", "B o C",
                 source="a graph is a bi-point-determining graph with a cograph superimposed on each vertex"),
        Identity('bipd-from-connected', "B", "(1 + X) * (E o (Bc - X))",
                 source="bi-pd graphs have at most one isolated vertex beside larger connected components"),
        Identity('bicolored-from-connected', "GXY", "E o GcXY",
                 source="bicolored graphs are sets of connected bicolored graphs"),
        Identity('semi-pd-bicolored-from-connected', "PsXY", "(1 + X) * (1 + Y) * (E o Pc2XY)",
                 source="semi-pd bicolored graphs have at most one isolated vertex of each color"),
        Identity('pd-bicolored-from-connected', "PXY", "(1 + X + Y) * (E o Pc2XY)",
                 source="pd bicolored graphs have at most one isolated vertex"),
        Identity('bicolored-over-sets', "GXY", "PsXY(Ep(X), Ep(Y))",
                 source="a bicolored graph is a semi-pd bicolored graph blown up by nonempty sets of each color"),
        Identity('endpoint-at-minus-x', "HXXY(X, -X)", "Mc",
                 source="endpoints of sort Y in H(X, X+Y), with Y replaced by -X"),
        Identity('trees-at-rooted-inverse', "A o (X * (E o (-X)))", "X - E_2 o (-X)",
                 source="trees composed with the inverse of rooted trees"),
    ]
    BIPD_FORBIDDEN_PARTS = (2, 3, 4)

    @staticmethod
    def _difference(lhs: CycleIndex, rhs: CycleIndex) -> str:
        degree = min(lhs.maxdeg, rhs.maxdeg)
        diff = lhs.truncate(degree) - rhs.truncate(degree)
        terms = diff.sorted_terms()[:4]
        return "lhs - rhs = " + format_cycle_index(CycleIndex(diff.sorts, degree, dict(terms))) + (
            " + ..." if len(diff.terms) > 4 else "")

    @classmethod
    def check(cls, identity: Identity, maxdeg: int) -> CheckResult:
        lhs = SpeciesEvaluator.evaluate_text(identity.lhs, maxdeg)
        rhs = SpeciesEvaluator.evaluate_text(identity.rhs, maxdeg)
        if identity.compare == SeriesKind.CYCLE_INDEX:
            passed = lhs.agrees_with(rhs)
            detail = "" if passed else cls._difference(lhs, rhs)
        else:
            extract = CycleIndexRing.ogf_series if identity.compare == SeriesKind.OGF else CycleIndexRing.egf_series
            left, right = extract(lhs), extract(rhs)
            passed = left.coefficients == right.coefficients
            detail = "" if passed else f"{left.coefficients} != {right.coefficients}"
        description = f"{identity.lhs} = {identity.rhs}"
        if identity.compare != SeriesKind.CYCLE_INDEX:
            description += f" ({identity.compare.value})"
        return CheckResult(SUITE, identity.tag, description, passed, detail, identity.source)

    @classmethod
    def bipd_forbidden_monomials(cls, maxdeg: int) -> CheckResult:
        """B has no term p1^a p_k for k in 2, 3, 4."""
        b = SpeciesCatalog.species_ci('B', maxdeg)
        found = [mon for mon in b.terms
                 if len(mon) >= 1 and mon[-1][1] in cls.BIPD_FORBIDDEN_PARTS and mon[-1][2] == 1
                 and all(k == 1 for _, k, _ in mon[:-1])]
        return CheckResult(SUITE, 'bipd-no-single-short-cycle', "Z_B has no p1^a p2, p1^a p3, p1^a p4 term",
                           not found, f"found {found}" if found else "",
                           "bi-pd automorphism groups hold no transposition, 3-cycle or 4-cycle")

    @staticmethod
    def endpoint_sort_substitution(maxdeg: int) -> CheckResult:
        """Substituting Y := -X in H(X, X+Y) leaves the connected endpoint-free graphs."""
        h = SpeciesCatalog.species_ci('HXXY', maxdeg)
        substituted = SortOperations.sort_subst(h, 1, 0, -1)
        mc = SpeciesCatalog.species_ci('Mc', maxdeg)
        passed = substituted.agrees_with(mc)
        return CheckResult(SUITE, 'endpoint-sort-substitution', "HXXY with y := -x equals Mc", passed,
                           "" if passed else IdentityBattery._difference(substituted, mc))

    @staticmethod
    def positivity(maxdeg: int) -> List[CheckResult]:
        """Genuine species have nonnegative integer labeled and unlabeled counts."""
        results = []
        for name, entry in SpeciesCatalog.ENTRIES.items():
            if not entry.genuine:
                continue
            f = SpeciesCatalog.species_ci(name, maxdeg)
            bad = []
            for series in (CycleIndexRing.egf_series(f), CycleIndexRing.ogf_series(f)):
                bad.extend(f"{series.kind.value} {d}: {series.count(*d)}" for d in series.coefficients
                           if series.count(*d) < 0 or series.count(*d).denominator != 1)
            results.append(CheckResult(SUITE, f'positive-{name}', f"{name} counts are nonnegative integers",
                                       not bad, "; ".join(bad[:5])))
        return results

    @classmethod
    def run(cls, maxdeg: int) -> List[CheckResult]:
        logger.info("identity battery at degree %d", maxdeg)
        results = [cls.check(identity, maxdeg) for identity in cls.IDENTITIES]
        results.append(cls.bipd_forbidden_monomials(maxdeg))
        results.append(cls.endpoint_sort_substitution(maxdeg))
        results.extend(cls.positivity(maxdeg))
        return results
