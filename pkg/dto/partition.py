from collections import Counter
from dataclasses import dataclass
from math import factorial, prod
from typing import Dict, Iterable, Tuple


@dataclass(frozen=True)
class Partition:
    """Integer partition, parts stored in weakly decreasing order."""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise ValueError(f"Partition parts must be positive: {self.parts}")
        if list(self.parts) != sorted(self.parts, reverse=True):
            object.__setattr__(self, 'parts', tuple(sorted(self.parts, reverse=True)))

    @classmethod
    def from_multiplicities(cls, multiplicities: Dict[int, int]) -> 'Partition':
        parts = []
        for part, count in multiplicities.items():
            parts.extend([part] * count)
        return cls(tuple(parts))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def multiplicities(self) -> Dict[int, int]:
        """c_i: number of parts equal to i."""
        return dict(Counter(self.parts))

    def z(self) -> int:
        """Order of the centralizer of a permutation with this cycle type."""
        return prod(i ** c * factorial(c) for i, c in self.multiplicities.items())

    def __iter__(self) -> Iterable[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)
