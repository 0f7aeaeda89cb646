"""Brute-force partition oracle.

Everything here works straight from the definitions by enumerating actual
partitions; it is deliberately slow and serves as the independent ground
truth that the generating-function pipeline is measured against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import RangeTooLarge

__all__ = [
    "MAX_ENUMERATION_N",
    "Partition",
    "enumerate_partitions",
    "mex",
    "moex",
    "sigma_mex_oracle",
    "sigma_moex_oracle",
    "partition_count",
]

# p(60) is just under a million partitions; beyond that brute force stops
# being honest desk-scale work.
MAX_ENUMERATION_N = 60


@dataclass(frozen=True)
class Partition:
    """Non-increasing sequence of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError("parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be non-increasing")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)


def _iter_parts(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _iter_parts(n - first, first):
            yield (first,) + rest


def _check_range(n: int) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_ENUMERATION_N:
        raise RangeTooLarge(
            f"enumeration capped at n <= {MAX_ENUMERATION_N}; "
            "use the generating-function pipeline for larger n"
        )


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, streamed in reverse-lexicographic order.

    The empty partition is the unique partition of 0.
    """
    _check_range(n)
    for parts in _iter_parts(n, n):
        yield Partition(parts)


def mex(p: Partition) -> int:
    """Smallest positive integer that is not a part."""
    present = set(p.parts)
    k = 1
    while k in present:
        k += 1
    return k


def moex(p: Partition) -> int:
    """Smallest odd positive integer that is not a part."""
    present = set(p.parts)
    k = 1
    while k in present:
        k += 2
    return k


def _mex_of(parts: tuple[int, ...]) -> int:
    present = set(parts)
    k = 1
    while k in present:
        k += 1
    return k


def _moex_of(parts: tuple[int, ...]) -> int:
    present = set(parts)
    k = 1
    while k in present:
        k += 2
    return k


def sigma_mex_oracle(n: int) -> int:
    """Sum of mex over all partitions of n, by direct enumeration."""
    _check_range(n)
    return sum(_mex_of(parts) for parts in _iter_parts(n, n))


def sigma_moex_oracle(n: int) -> int:
    """Sum of moex over all partitions of n, by direct enumeration."""
    _check_range(n)
    return sum(_moex_of(parts) for parts in _iter_parts(n, n))


def partition_count(n: int) -> int:
    """Number of partitions of n, by counting the enumeration stream."""
    _check_range(n)
    return sum(1 for _ in _iter_parts(n, n))
