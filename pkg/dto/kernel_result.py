from dataclasses import dataclass
from typing import Tuple

from dto.graph import Graph


@dataclass(frozen=True)
class KernelResult:
    """Kernel graph with one fiber per kernel vertex.

    fibers[i] lists the original vertices blown up from kernel vertex i, ascending;
    fibers are ordered by smallest vertex. fiber_graphs[i] is the subgraph induced on fibers[i].
    """
    kernel: Graph
    fibers: Tuple[Tuple[int, ...], ...]
    fiber_graphs: Tuple[Graph, ...]
