"""Sorted, disjoint, non-adjacent closed integer intervals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class IntervalList:
    """Normalized union of closed integer intervals ``[lo, hi]``.

    Empty pieces (``hi < lo``) are dropped, the rest sorted and merged
    whenever they overlap or touch, so equality is set equality.
    """

    intervals: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "intervals", _normalize(self.intervals))

    @classmethod
    def of(cls, pieces: Iterable[tuple[int, int]]) -> "IntervalList":
        return cls(tuple(pieces))

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __bool__(self) -> bool:
        return bool(self.intervals)

    def __contains__(self, n: int) -> bool:
        return self.locate(n) is not None

    def locate(self, n: int) -> int | None:
        """Index of the interval containing ``n``, or None."""
        lo_i, hi_i = 0, len(self.intervals)
        while lo_i < hi_i:
            mid = (lo_i + hi_i) // 2
            lo, hi = self.intervals[mid]
            if n < lo:
                hi_i = mid
            elif n > hi:
                lo_i = mid + 1
            else:
                return mid
        return None

    def values(self) -> list[int]:
        return [n for lo, hi in self.intervals for n in range(lo, hi + 1)]

    def count(self) -> int:
        return sum(hi - lo + 1 for lo, hi in self.intervals)

    def clip(self, lo: int, hi: int) -> "IntervalList":
        return IntervalList(tuple((max(a, lo), min(b, hi)) for a, b in self.intervals))

    def union(self, other: "IntervalList") -> "IntervalList":
        return IntervalList(self.intervals + other.intervals)

    def map(self, f) -> "IntervalList":
        """Image under a monotone (either direction) integer map."""
        return IntervalList(tuple(tuple(sorted((f(a), f(b)))) for a, b in self.intervals))

    def __str__(self) -> str:
        return " ".join(f"[{lo},{hi}]" for lo, hi in self.intervals)


def _normalize(pieces) -> tuple[tuple[int, int], ...]:
    cleaned = sorted((int(lo), int(hi)) for lo, hi in pieces if hi >= lo)
    out: list[list[int]] = []
    for lo, hi in cleaned:
        if out and lo <= out[-1][1] + 1:
            out[-1][1] = max(out[-1][1], hi)
        else:
            out.append([lo, hi])
    return tuple((lo, hi) for lo, hi in out)
