import logging
from typing import Optional, Sequence

import numpy as np

from dto.graph import Graph

logger = logging.getLogger(__name__)


class GraphBuilder:
    """Graph constructors: superimposition, union, join, complement and random graphs."""

    @staticmethod
    def superimpose(outer: Graph, fibers: Sequence[Graph], blocks: Optional[Sequence[Sequence[int]]] = None) -> Graph:
        """Blow up vertex i of outer into fibers[i], joining fibers completely along outer edges.

        Args:
            outer: Graph with one vertex per fiber.
            fibers: Nonempty fiber graphs.
            blocks: Target vertices of each fiber, in the fiber's own vertex order; consecutive
                ranges when omitted. Together they must be exactly 0..N-1.

        Returns:
            The superimposed graph on N = Σ |fiber| vertices.

        Raises:
            ValueError: On arity mismatch, empty fibers or blocks that are not a partition.
        """
        if len(fibers) != outer.n:
            raise ValueError(f"Outer graph has {outer.n} vertices but {len(fibers)} fibers were given")
        if any(f.n == 0 for f in fibers):
            raise ValueError("Fibers must be nonempty")
        total = sum(f.n for f in fibers)
        if blocks is None:
            blocks, start = [], 0
            for f in fibers:
                blocks.append(list(range(start, start + f.n)))
                start += f.n
        if [len(b) for b in blocks] != [f.n for f in fibers]:
            raise ValueError("Block sizes do not match fiber sizes")
        if sorted(v for b in blocks for v in b) != list(range(total)):
            raise ValueError("Blocks must partition the vertex set")

        edges = []
        for block, fiber in zip(blocks, fibers):
            edges.extend((block[u], block[v]) for u, v in fiber.edges())
        for a, b in outer.edges():
            edges.extend((u, v) for u in blocks[a] for v in blocks[b])
        return Graph.from_edges(total, edges)

    @staticmethod
    def disjoint_union(g: Graph, h: Graph) -> Graph:
        """Superimposition over the edgeless graph on two vertices."""
        return GraphBuilder.superimpose(Graph.empty(2), [g, h])

    @staticmethod
    def join(g: Graph, h: Graph) -> Graph:
        """Superimposition over K₂."""
        return GraphBuilder.superimpose(Graph.complete(2), [g, h])

    @staticmethod
    def complement(g: Graph) -> Graph:
        full = (1 << g.n) - 1
        return Graph(g.n, tuple(full & ~mask & ~(1 << v) for v, mask in enumerate(g.adjacency)))

    @staticmethod
    def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
        """G(n, p) with edges drawn in upper-triangular order."""
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        keep = rng.random(len(pairs)) < p
        return Graph.from_edges(n, [pair for pair, k in zip(pairs, keep) if k])

    @staticmethod
    def random_cograph(n: int, rng: np.random.Generator) -> Graph:
        """Random cograph built from single vertices by unions and joins, then shuffled."""
        if n < 1:
            raise ValueError(f"Cographs need at least one vertex, got {n}")

        def build(size: int) -> Graph:
            if size == 1:
                return Graph.empty(1)
            split = int(rng.integers(1, size))
            left, right = build(split), build(size - split)
            return GraphBuilder.join(left, right) if rng.random() < 0.5 else GraphBuilder.disjoint_union(left, right)

        return build(n).relabel([int(v) for v in rng.permutation(n)])
