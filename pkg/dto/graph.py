from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

MAX_VERTICES = 32


def edge_pairs(n: int) -> List[Tuple[int, int]]:
    """Vertex pairs in upper-triangular row order: (0,1), (0,2), ..., (n-2,n-1)."""
    return list(combinations(range(n), 2))


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 0..n-1; adjacency[v] is the neighbor bitmask of v."""
    n: int
    adjacency: Tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"Graphs have 0..{MAX_VERTICES} vertices, got {self.n}")
        if len(self.adjacency) != self.n:
            raise ValueError(f"Expected {self.n} adjacency masks, got {len(self.adjacency)}")
        for v, mask in enumerate(self.adjacency):
            if mask >> self.n or mask >> v & 1:
                raise ValueError(f"Vertex {v} has an invalid neighbor mask {mask:b}")
            for u in range(self.n):
                if (mask >> u & 1) != (self.adjacency[u] >> v & 1):
                    raise ValueError(f"Adjacency is not symmetric at ({v}, {u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> 'Graph':
        adjacency = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"Loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"Edge ({u}, {v}) outside vertices 0..{n - 1}")
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        return cls(n, tuple(adjacency))

    @classmethod
    def empty(cls, n: int) -> 'Graph':
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> 'Graph':
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> 'Graph':
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def from_code(cls, n: int, code: int) -> 'Graph':
        """Inverse of `code`."""
        pairs = edge_pairs(n)
        top = len(pairs) - 1
        return cls.from_edges(n, [pair for idx, pair in enumerate(pairs) if code >> (top - idx) & 1])

    def code(self) -> int:
        """Upper-triangular adjacency bit-string read as an integer, first pair most significant."""
        result = 0
        for u, v in edge_pairs(self.n):
            result = (result << 1) | (self.adjacency[u] >> v & 1)
        return result

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u, v in edge_pairs(self.n) if self.adjacency[u] >> v & 1]

    def neighbors(self, v: int) -> List[int]:
        return [u for u in range(self.n) if self.adjacency[v] >> u & 1]

    def degree(self, v: int) -> int:
        return bin(self.adjacency[v]).count('1')

    def closed_neighborhood(self, v: int) -> int:
        return self.adjacency[v] | (1 << v)

    def induced(self, vertices: Sequence[int]) -> 'Graph':
        """Subgraph induced on vertices, relabeled 0..k-1 in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(len(vertices), [(index[u], index[v]) for u, v in self.edges()
                                                if u in index and v in index])

    def relabel(self, permutation: Sequence[int]) -> 'Graph':
        """Graph with vertex v renamed permutation[v]."""
        return Graph.from_edges(self.n, [(permutation[u], permutation[v]) for u, v in self.edges()])


@dataclass(frozen=True)
class BicoloredGraph:
    """m white and n black vertices; rows[i] is the bitmask of black neighbors of white i."""
    m: int
    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n > MAX_VERTICES:
            raise ValueError(f"Invalid bicolored vertex counts ({self.m}, {self.n})")
        if len(self.rows) != self.m or any(r >> self.n for r in self.rows):
            raise ValueError("Row masks do not match the black vertex count")

    @classmethod
    def from_edges(cls, m: int, n: int, edges: Iterable[Tuple[int, int]]) -> 'BicoloredGraph':
        rows = [0] * m
        for i, j in edges:
            if not (0 <= i < m and 0 <= j < n):
                raise ValueError(f"Edge ({i}, {j}) outside {m} white and {n} black vertices")
            rows[i] |= 1 << j
        return cls(m, n, tuple(rows))

    @classmethod
    def from_code(cls, m: int, n: int, code: int) -> 'BicoloredGraph':
        return cls(m, n, tuple((code >> (i * n)) & ((1 << n) - 1) for i in range(m)))

    def code(self) -> int:
        """Bit i*n + j is set when white i and black j are adjacent."""
        return sum(row << (i * self.n) for i, row in enumerate(self.rows))

    def edges(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(self.m) for j in range(self.n) if self.rows[i] >> j & 1]

    def columns(self) -> Tuple[int, ...]:
        """White-neighbor bitmask of every black vertex."""
        return tuple(sum((self.rows[i] >> j & 1) << i for i in range(self.m)) for j in range(self.n))

    def as_graph(self) -> Graph:
        """Underlying plain graph: whites 0..m-1, blacks m..m+n-1."""
        return Graph.from_edges(self.m + self.n, [(i, self.m + j) for i, j in self.edges()])
