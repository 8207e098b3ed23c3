import logging
from itertools import combinations

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from dto.graph import Graph
from dto.graph_flags import GraphFlags
from service.graphs.kernel_reducer import KernelReducer

logger = logging.getLogger(__name__)


def _distinct(values) -> bool:
    values = list(values)
    return len(set(values)) == len(values)


class GraphClassifier:
    """Isomorphism-invariant graph properties."""

    @staticmethod
    def is_pd(g: Graph) -> bool:
        """Open neighborhoods pairwise distinct."""
        return _distinct(g.adjacency)

    @staticmethod
    def is_co_pd(g: Graph) -> bool:
        return _distinct(g.closed_neighborhood(v) for v in range(g.n))

    @staticmethod
    def components(g: Graph) -> int:
        seen, count = 0, 0
        for start in range(g.n):
            if seen >> start & 1:
                continue
            count += 1
            frontier = 1 << start
            seen |= frontier
            while frontier:
                reach = 0
                for v in range(g.n):
                    if frontier >> v & 1:
                        reach |= g.adjacency[v]
                frontier = reach & ~seen
                seen |= frontier
        return count

    @staticmethod
    def is_connected(g: Graph) -> bool:
        """The empty graph is not connected."""
        return g.n > 0 and GraphClassifier.components(g) == 1

    @staticmethod
    def is_edgeless(g: Graph) -> bool:
        return not g.edges()

    @staticmethod
    def is_complete(g: Graph) -> bool:
        return len(g.edges()) == g.n * (g.n - 1) // 2

    @staticmethod
    def is_endpoint_free(g: Graph) -> bool:
        """No vertex of degree exactly one; isolated vertices are allowed."""
        return all(g.degree(v) != 1 for v in range(g.n))

    @staticmethod
    def is_acyclic(g: Graph) -> bool:
        return len(g.edges()) == g.n - GraphClassifier.components(g)

    @staticmethod
    def is_p4_free(g: Graph) -> bool:
        """A 4-set induces P₄ iff it spans 3 edges with degree sequence 1,1,2,2."""
        for quad in combinations(range(g.n), 4):
            mask = sum(1 << v for v in quad)
            degrees = sorted(bin(g.adjacency[v] & mask).count('1') for v in quad)
            if degrees == [1, 1, 2, 2]:
                return False
        return True

    @staticmethod
    def to_networkx(g: Graph) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(g.n))
        graph.add_edges_from(g.edges())
        return graph

    @staticmethod
    def has_induced_p4_networkx(g: Graph) -> bool:
        """Independent check through networkx's induced subgraph isomorphism."""
        matcher = GraphMatcher(GraphClassifier.to_networkx(g), nx.path_graph(4))
        return matcher.subgraph_is_isomorphic()

    @staticmethod
    def is_connected_networkx(g: Graph) -> bool:
        return g.n > 0 and nx.is_connected(GraphClassifier.to_networkx(g))

    @staticmethod
    def is_forest_networkx(g: Graph) -> bool:
        """networkx rejects the null graph; it counts as a forest here."""
        return g.n == 0 or nx.is_forest(GraphClassifier.to_networkx(g))

    @staticmethod
    def is_cograph(g: Graph) -> bool:
        """The bi-point-determining kernel has at most one vertex."""
        return KernelReducer.bipd_kernel(g).kernel.n <= 1

    @classmethod
    def classify(cls, g: Graph) -> GraphFlags:
        pd, co_pd = cls.is_pd(g), cls.is_co_pd(g)
        return GraphFlags(
            pd=pd,
            co_pd=co_pd,
            bipd=pd and co_pd,
            connected=cls.is_connected(g),
            endpoint_free=cls.is_endpoint_free(g),
            cograph=cls.is_cograph(g),
            acyclic=cls.is_acyclic(g),
        )
