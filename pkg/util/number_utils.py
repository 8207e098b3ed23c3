from functools import lru_cache
from typing import List, Tuple

from sympy import divisors as sympy_divisors
from sympy import mobius as sympy_mobius
from sympy import totient as sympy_totient
from sympy.utilities.iterables import partitions as sympy_partitions

from dto.partition import Partition


def mobius(k: int) -> int:
    """Möbius function.

    Args:
        k: Positive integer.

    Returns:
        0 if k has a squared prime factor, (-1)^j for j distinct prime factors.

    Raises:
        ValueError: If k < 1.
    """
    if k < 1:
        raise ValueError(f"mobius is defined for k >= 1, got {k}")
    return int(sympy_mobius(k))


def totient(k: int) -> int:
    """Euler's phi function."""
    if k < 1:
        raise ValueError(f"totient is defined for k >= 1, got {k}")
    return int(sympy_totient(k))


def divisors(k: int) -> List[int]:
    """Positive divisors of k in ascending order."""
    return [int(d) for d in sympy_divisors(k)]


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    """All partitions of n, largest parts first.

    Args:
        n: Nonnegative integer weight.

    Returns:
        Tuple of Partition objects; the empty partition for n = 0.
    """
    if n < 0:
        raise ValueError(f"Cannot partition a negative integer: {n}")
    if n == 0:
        return (Partition(()),)
    # sympy may reuse the yielded dict, copy before converting
    found = [Partition.from_multiplicities(dict(p)) for p in sympy_partitions(n)]
    return tuple(sorted(found, key=lambda p: p.parts, reverse=True))
