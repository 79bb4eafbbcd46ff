"""Lüroth semigroups of smooth plane curves.

``LS(d)`` is the set of degrees of globally generated line bundles on a
smooth plane curve of degree ``d``; it depends on ``d`` only and its
complement in the naturals is a finite union of intervals.
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

from .intervals import IntervalList


@lru_cache(maxsize=None)
def luroth_gaps(d: int) -> IntervalList:
    """Complement of LS(d) in the naturals, as normalized intervals.

    For ``d >= 3`` the gaps are ``[(a-1)d + 1, a(d-a) - 1]`` for
    ``1 <= a <= isqrt(d - 2)``; lines and conics have no gaps.

    >>> str(luroth_gaps(6))
    '[1,4] [7,7]'
    """
    if d <= 0:
        raise ValueError(f"curve degree must be positive, got {d}")
    if d < 3:
        return IntervalList()
    return IntervalList.of(((a - 1) * d + 1, a * (d - a) - 1) for a in range(1, isqrt(d - 2) + 1))


def luroth_contains(d: int, n: int) -> bool:
    """Membership ``n in LS(d)``; negative degrees are never in it."""
    gaps = luroth_gaps(d)
    return n >= 0 and n not in gaps


def luroth_gap_hit(d: int, n: int) -> tuple[int, int, int] | None:
    """``(a, lo, hi)`` for the gap interval of LS(d) holding ``n``, if any."""
    gaps = luroth_gaps(d)
    i = gaps.locate(n)
    if i is None:
        return None
    lo, hi = gaps.intervals[i]
    # gap intervals are pairwise >= 2 apart, so normalization keeps their order
    return i + 1, lo, hi
