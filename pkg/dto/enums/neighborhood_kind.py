from enum import Enum


class NeighborhoodKind(Enum):
    OPEN = 'open'  # weak siblings, fibers edgeless
    CLOSED = 'closed'  # strong siblings, fibers complete
