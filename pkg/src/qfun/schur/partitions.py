"""Strict partitions and their index sets."""

from __future__ import annotations

from typing import Iterable, Iterator

from ..pfaffian.matrices import IndexSet

__all__ = ["StrictPartition", "index_set", "strict_partitions"]


class StrictPartition(tuple):
    """A strictly decreasing tuple of positive integers.

    >>> StrictPartition([3, 1]).weight
    4
    >>> StrictPartition([2, 2])
    Traceback (most recent call last):
        ...
    ValueError: parts must be strictly decreasing positive integers, got (2, 2)
    """

    def __new__(cls, parts: Iterable[int] = ()) -> StrictPartition:
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts) or any(a <= b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be strictly decreasing positive integers, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> StrictPartition:
        """Read ``"3,1"``; the empty string (or ``"0"``) is the empty partition."""
        text = text.strip().strip("()[]")
        if text in ("", "0"):
            return cls()
        return cls(int(t) for t in text.split(","))

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def padded(self, parity: int) -> tuple[int, ...]:
        """The parts, with a trailing 0 appended when ``len + parity`` is odd."""
        return tuple(self) + (0,) if (len(self) + parity) % 2 else tuple(self)

    def contains(self, other: StrictPartition) -> bool:
        """Diagram containment ``other ⊆ self``."""
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def __repr__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    __str__ = __repr__


def _distinct_parts(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _distinct_parts(n - first, first - 1):
            yield (first,) + rest


def strict_partitions(max_weight: int) -> list[StrictPartition]:
    """All strict partitions of weight at most ``max_weight``.

    Ordered by weight; within a weight the first part decreases.

    >>> strict_partitions(3)
    [(), (1), (2), (3), (2,1)]
    """
    if max_weight < 0:
        raise ValueError("max_weight must be nonnegative")
    return [StrictPartition(p) for w in range(max_weight + 1) for p in _distinct_parts(w, w)]


def index_set(lam: StrictPartition, n: int) -> IndexSet:
    """``{λ_1, ..., λ_l}`` when ``n + l`` is even, else ``{λ_1, ..., λ_l, 0}``.

    Elements live in the nonnegative integers, so the result has no finite
    ground set.
    """
    return IndexSet(StrictPartition(lam).padded(n))
