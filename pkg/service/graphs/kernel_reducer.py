import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from dto.enums.merge_order import MergeOrder
from dto.enums.neighborhood_kind import NeighborhoodKind
from dto.graph import Graph
from dto.kernel_result import KernelResult
from service.graphs.graph_builder import GraphBuilder

logger = logging.getLogger(__name__)


def _quotient(g: Graph, blocks: Sequence[Sequence[int]]) -> Graph:
    """Graph on blocks; two blocks are adjacent when any of their vertices are."""
    masks = [sum(1 << v for v in block) for block in blocks]
    edges = []
    for a in range(len(blocks)):
        reach = 0
        for v in blocks[a]:
            reach |= g.adjacency[v]
        edges.extend((a, b) for b in range(a + 1, len(blocks)) if reach & masks[b])
    return Graph.from_edges(len(blocks), edges)


def _result(g: Graph, blocks: Sequence[Sequence[int]]) -> KernelResult:
    fibers = sorted(tuple(sorted(b)) for b in blocks)
    return KernelResult(kernel=_quotient(g, fibers), fibers=tuple(fibers),
                        fiber_graphs=tuple(g.induced(f) for f in fibers))


class KernelReducer:
    """Quotients of a graph by sibling relations."""

    @staticmethod
    def pd_kernel(g: Graph, mode: NeighborhoodKind = NeighborhoodKind.OPEN) -> KernelResult:
        """Identify vertices with equal open (or closed) neighborhoods in one pass.

        Open classes are independent sets and the kernel is point-determining; closed
        classes are cliques and the kernel is co-point-determining.
        """
        classes: Dict[int, List[int]] = {}
        for v in range(g.n):
            key = g.adjacency[v] if mode == NeighborhoodKind.OPEN else g.closed_neighborhood(v)
            classes.setdefault(key, []).append(v)
        return _result(g, list(classes.values()))

    @staticmethod
    def sibling_pairs(g: Graph) -> Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]:
        """Weak (equal open neighborhood) and strong (equal closed neighborhood) pairs, lexicographic.

        Raises:
            RuntimeError: If a vertex lies in both a weak and a strong pair.
        """
        weak, strong = [], []
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if g.adjacency[u] == g.adjacency[v]:
                    weak.append((u, v))
                elif g.closed_neighborhood(u) == g.closed_neighborhood(v):
                    strong.append((u, v))
        in_weak = {v for pair in weak for v in pair}
        shared = in_weak.intersection(v for pair in strong for v in pair)
        if shared:
            raise RuntimeError(f"Vertices {sorted(shared)} are both weak and strong siblings")
        return weak, strong

    @classmethod
    def bipd_kernel(cls, g: Graph, merge_order: MergeOrder = MergeOrder.DETERMINISTIC,
                    rng: Optional[np.random.Generator] = None) -> KernelResult:
        """Merge one sibling pair at a time until the quotient is bi-point-determining.

        Args:
            g: Input graph.
            merge_order: DETERMINISTIC takes the first weak pair, else the first strong pair;
                SEEDED_RANDOM picks uniformly among all eligible pairs.
            rng: Generator for SEEDED_RANDOM.

        Returns:
            The kernel; every fiber induces a cograph.
        """
        if merge_order == MergeOrder.SEEDED_RANDOM and rng is None:
            raise ValueError("Seeded-random merge order needs a random generator")
        blocks: List[List[int]] = [[v] for v in range(g.n)]
        current = g
        while True:
            weak, strong = cls.sibling_pairs(current)
            if not weak and not strong:
                break
            if merge_order == MergeOrder.DETERMINISTIC:
                a, b = weak[0] if weak else strong[0]
            else:
                pairs = weak + strong
                a, b = pairs[int(rng.integers(len(pairs)))]
            logger.debug("merging blocks %s and %s (%s siblings)", blocks[a], blocks[b],
                         "weak" if (a, b) in weak else "strong")
            blocks[a] = blocks[a] + blocks[b]
            del blocks[b]
            current = _quotient(g, blocks)
        return _result(g, blocks)

    @staticmethod
    def reconstruct(result: KernelResult) -> Graph:
        return GraphBuilder.superimpose(result.kernel, result.fiber_graphs, result.fibers)
