import logging
from typing import List, Optional

import numpy as np

from dto.check_result import CheckResult
from dto.enums.merge_order import MergeOrder
from dto.enums.neighborhood_kind import NeighborhoodKind
from dto.enums.verify_suite import VerifySuite
from dto.graph import Graph
from service.graphs.graph_builder import GraphBuilder
from service.graphs.graph_classifier import GraphClassifier
from service.graphs.graph_oracle import GraphOracle
from service.graphs.kernel_reducer import KernelReducer

logger = logging.getLogger(__name__)

SUITE = VerifySuite.CONFLUENCE.value


class ConfluenceChecker:
    """Randomized checks of the kernel reductions and of merge-order independence."""

    REDUCTION_GRAPHS = 1000
    CONFLUENCE_GRAPHS = 500
    ORDERS_PER_GRAPH = 20
    MAX_RANDOM_VERTICES = 10
    EXHAUSTIVE_MAX_N = 6

    @classmethod
    def random_graphs(cls, rng: np.random.Generator, count: int) -> List[Graph]:
        graphs = []
        for _ in range(count):
            n = int(rng.integers(1, cls.MAX_RANDOM_VERTICES + 1))
            if rng.random() < 0.25:
                graphs.append(GraphBuilder.random_cograph(n, rng))
            else:
                graphs.append(GraphBuilder.random_graph(n, float(rng.uniform(0.1, 0.9)), rng))
        return graphs

    @classmethod
    def reduction_checks(cls, graphs: List[Graph]) -> List[CheckResult]:
        """Round trip, fiber class and kernel class for every reduction mode."""
        failures = {'open': [], 'closed': [], 'bipd': []}
        for i, g in enumerate(graphs):
            open_result = KernelReducer.pd_kernel(g, NeighborhoodKind.OPEN)
            if (KernelReducer.reconstruct(open_result) != g or not GraphClassifier.is_pd(open_result.kernel)
                    or not all(GraphClassifier.is_edgeless(f) for f in open_result.fiber_graphs)):
                failures['open'].append(i)
            closed_result = KernelReducer.pd_kernel(g, NeighborhoodKind.CLOSED)
            if (KernelReducer.reconstruct(closed_result) != g or not GraphClassifier.is_co_pd(closed_result.kernel)
                    or not all(GraphClassifier.is_complete(f) for f in closed_result.fiber_graphs)):
                failures['closed'].append(i)
            bipd_result = KernelReducer.bipd_kernel(g)
            kernel = bipd_result.kernel
            if (KernelReducer.reconstruct(bipd_result) != g
                    or not (GraphClassifier.is_pd(kernel) and GraphClassifier.is_co_pd(kernel))
                    or not all(GraphClassifier.is_p4_free(f) for f in bipd_result.fiber_graphs)):
                failures['bipd'].append(i)
        descriptions = {
            'open': "open-neighborhood kernel: round trip, edgeless fibers, point-determining kernel",
            'closed': "closed-neighborhood kernel: round trip, complete fibers, co-point-determining kernel",
            'bipd': "bi-point-determining kernel: round trip, cograph fibers, bi-point-determining kernel",
        }
        return [CheckResult(SUITE, f"reduction-{mode}", descriptions[mode], not bad,
                            f"failing graphs {bad[:10]}" if bad else "")
                for mode, bad in failures.items()]

    @classmethod
    def confluence_check(cls, graphs: List[Graph], rng: np.random.Generator) -> CheckResult:
        """Random merge orders reach the same fibers and kernel as the deterministic order."""
        diverging = []
        for i, g in enumerate(graphs):
            reference = KernelReducer.bipd_kernel(g)
            for _ in range(cls.ORDERS_PER_GRAPH):
                result = KernelReducer.bipd_kernel(g, MergeOrder.SEEDED_RANDOM, rng)
                if result.fibers != reference.fibers or result.kernel != reference.kernel:
                    diverging.append(i)
                    break
        return CheckResult(SUITE, "bipd-confluence",
                           f"{len(graphs)} graphs x {cls.ORDERS_PER_GRAPH} merge orders give one kernel",
                           not diverging, f"diverging graphs {diverging[:10]}" if diverging else "")

    @classmethod
    def cograph_recognition_check(cls, n_max: int) -> CheckResult:
        """Kernel collapse agrees with induced-P₄-freeness on every graph up to n_max vertices."""
        disagreements = []
        for n in range(1, min(n_max, cls.EXHAUSTIVE_MAX_N) + 1):
            census = GraphOracle.census(n)
            for row in census[census['code'] == census['canon']].itertuples():
                g = Graph.from_code(n, int(row.code))
                p4_free = GraphClassifier.is_p4_free(g)
                if bool(row.cograph) != p4_free or p4_free == GraphClassifier.has_induced_p4_networkx(g):
                    disagreements.append((n, int(row.code)))
        return CheckResult(SUITE, "cograph-recognition",
                           "single-vertex bi-pd kernel iff no induced P4 (networkx cross-check)",
                           not disagreements, f"disagreeing (n, code) {disagreements[:10]}" if disagreements else "")

    @classmethod
    def run(cls, seed: int, n_max: int, graphs: Optional[int] = None) -> List[CheckResult]:
        """Reduction checks on REDUCTION_GRAPHS random graphs, confluence on the first CONFLUENCE_GRAPHS."""
        rng = np.random.default_rng(seed)
        sample = cls.random_graphs(rng, cls.REDUCTION_GRAPHS if graphs is None else graphs)
        confluence_sample = sample[:cls.CONFLUENCE_GRAPHS if graphs is None else graphs]
        logger.info("confluence suite: %d random graphs, seed %d", len(sample), seed)
        return (cls.reduction_checks(sample) + [cls.confluence_check(confluence_sample, rng)]
                + [cls.cograph_recognition_check(n_max)])
