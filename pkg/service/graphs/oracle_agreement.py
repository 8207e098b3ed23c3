import logging
from typing import List

from dto.check_result import CheckResult
from dto.enums.bicolored_property import BicoloredProperty
from dto.enums.verify_suite import VerifySuite
from dto.graph import Graph
from service.catalog.edge_polynomial import EdgePolynomial
from service.catalog.species_catalog import SpeciesCatalog
from service.core.cycle_index_ring import CycleIndexRing
from service.graphs.bicolored_oracle import BicoloredOracle
from service.graphs.graph_classifier import GraphClassifier
from service.graphs.graph_oracle import GraphOracle

logger = logging.getLogger(__name__)

SUITE = VerifySuite.ORACLE.value


class OracleAgreement:
    """Compares brute-force graph counts with counts read off catalog cycle indices."""

    BICOLORED_POWER_CHECK_MAX = 4

    @staticmethod
    def plain_checks(n_max: int) -> List[CheckResult]:
        results = []
        for name, entry in SpeciesCatalog.ENTRIES.items():
            if entry.graph_properties is None:
                continue
            f = SpeciesCatalog.species_ci(name, n_max)
            props = entry.graph_properties
            label = " and ".join(p.value for p in props) or "all graphs"
            for labeled in (True, False):
                kind = "labeled" if labeled else "unlabeled"
                mismatches = []
                for n in range(1, n_max + 1):
                    if labeled:
                        expected, found = CycleIndexRing.labeled_count(f, [n]), GraphOracle.count_labeled(props, n)
                    else:
                        expected, found = CycleIndexRing.unlabeled_count(f, [n]), GraphOracle.count_unlabeled(props, n)
                    if expected != found:
                        mismatches.append(f"n={n}: series {expected}, oracle {found}")
                results.append(CheckResult(SUITE, f"oracle-{name}-{kind}", f"{kind} {label} graphs match {name}",
                                           not mismatches, "; ".join(mismatches)))
        return results

    @staticmethod
    def bicolored_checks(n_max: int) -> List[CheckResult]:
        results = []
        for name, entry in SpeciesCatalog.ENTRIES.items():
            if entry.bicolored_properties is None:
                continue
            f = SpeciesCatalog.species_ci(name, n_max)
            props = [p for p in entry.bicolored_properties if p != BicoloredProperty.ANY]
            for labeled in (True, False):
                kind = "labeled" if labeled else "unlabeled"
                extract = CycleIndexRing.labeled_count if labeled else CycleIndexRing.unlabeled_count
                mismatches = []
                for total in range(1, n_max + 1):
                    for m in range(total + 1):
                        expected = extract(f, [m, total - m])
                        found = BicoloredOracle.count_bicolored(props, m, total - m, labeled)
                        if expected != found:
                            mismatches.append(f"({m},{total - m}): series {expected}, oracle {found}")
                results.append(CheckResult(SUITE, f"oracle-{name}-{kind}",
                                           f"{kind} bicolored graphs match {name}", not mismatches,
                                           "; ".join(mismatches)))
        return results

    @classmethod
    def edge_polynomial_checks(cls, n_max: int) -> List[CheckResult]:
        results = []
        mismatches = []
        for total in range(n_max + 1):
            for m in range(total + 1):
                n = total - m
                coefficients = EdgePolynomial.coefficients(EdgePolynomial.edge_gf(m, n))
                by_edges = BicoloredOracle.by_edges([], m, n)
                expected = {e: c for e, c in enumerate(coefficients) if c}
                if expected != by_edges:
                    mismatches.append(f"({m},{n}): polynomial {expected}, oracle {by_edges}")
        results.append(CheckResult(SUITE, "edge-polynomial", "b_{m,n}(x) matches the oracle edge distribution",
                                   not mismatches, "; ".join(mismatches)))

        top = cls.BICOLORED_POWER_CHECK_MAX
        bicolored = SpeciesCatalog.species_ci('GXY', 2 * top)
        wrong = [(m, n) for m in range(top + 1) for n in range(top + 1)
                 if CycleIndexRing.labeled_count(bicolored, [m, n]) != 2 ** (m * n)]
        results.append(CheckResult(SUITE, "bicolored-labeled-total", "2^{mn} labeled bicolored graphs",
                                   not wrong, f"failing sizes {wrong}" if wrong else ""))
        return results

    @staticmethod
    def complement_checks(n_max: int) -> List[CheckResult]:
        failing = [n for n in range(n_max + 1) if not GraphOracle.complement_duality(n)]
        return [CheckResult(SUITE, "complement-duality", "complement maps pd graphs onto co-pd graphs",
                            not failing, f"failing n {failing}" if failing else "")]

    @staticmethod
    def networkx_checks(n_max: int) -> List[CheckResult]:
        """Census connectivity and forest flags against networkx, one graph per class."""
        disagreements = {'connected': [], 'acyclic': []}
        for n in range(n_max + 1):
            census = GraphOracle.census(n)
            for row in census[census['code'] == census['canon']].itertuples():
                g = Graph.from_code(n, int(row.code))
                if bool(row.connected) != GraphClassifier.is_connected_networkx(g):
                    disagreements['connected'].append((n, int(row.code)))
                if bool(row.acyclic) != GraphClassifier.is_forest_networkx(g):
                    disagreements['acyclic'].append((n, int(row.code)))
        descriptions = {'connected': "bitmask connectivity agrees with networkx is_connected",
                        'acyclic': "edge-count forest test agrees with networkx is_forest"}
        return [CheckResult(SUITE, f"networkx-{flag}", descriptions[flag], not bad,
                            f"disagreeing (n, code) {bad[:10]}" if bad else "")
                for flag, bad in disagreements.items()]

    @classmethod
    def run(cls, n_max: int) -> List[CheckResult]:
        logger.info("oracle suite up to n=%d", n_max)
        return (cls.plain_checks(n_max) + cls.bicolored_checks(n_max)
                + cls.edge_polynomial_checks(n_max) + cls.complement_checks(n_max) + cls.networkx_checks(n_max))
