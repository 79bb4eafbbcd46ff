"""Chern pairs of globally generated rank two bundles on the projective plane.

A pair ``(c, y)`` is *effective* when some globally generated rank two
bundle has ``c1 = c`` and ``c2 = y``, and a *gap* otherwise.  Everything
here is integer arithmetic: quarter comparisons such as ``y < c**2 / 4``
are done as ``4*y < c**2``.

The decision procedure in :func:`classify` works window by window.  For
``c >= 4`` the unstable range ``c - 1 <= y < c**2/4`` is tiled by the
closed windows ``[(t-1)(c-t+1), t(c-t)]``, ``2 <= t <= c // 2``.  Window
endpoints are split bundles; an interior ``y`` is effective iff the residual
degree ``c(t-1) - y`` lies in the Lüroth semigroup ``LS(t-1)``.  The upper
unstable range mirrors the lower one through ``y -> c**2 - y``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt

from .intervals import IntervalList
from .luroth import luroth_contains, luroth_gap_hit

EMBEDDING_CHERN_PAIRS: tuple[tuple[int, int], ...] = ((1, 0), (1, 1), (2, 1), (2, 3))
"""``(c, y)`` for which the associated map to G(1,3) can be an embedding."""


@dataclass(frozen=True, order=True)
class ChernPair:
    c: int
    y: int


class Case(str, enum.Enum):
    ZERO = "Zero"
    FULL = "Full"
    BELOW_RANGE = "BelowRange"
    ABOVE_RANGE = "AboveRange"
    SPLIT_BOUNDARY = "SplitBoundary"
    WINDOW1_ADMISSIBLE = "Window1Admissible"
    WINDOW1_GAP = "Window1Gap"
    STABLE = "Stable"
    WINDOW3_DUAL = "Window3Dual"


_EFFECTIVE_CASES = frozenset(
    {Case.ZERO, Case.FULL, Case.SPLIT_BOUNDARY, Case.WINDOW1_ADMISSIBLE, Case.STABLE}
)


@dataclass(frozen=True)
class Classification:
    """Verdict for one pair plus the data that explains it.

    For ``Window3Dual`` the window fields (``t``, ``split_a``, ``l``,
    ``luroth_gap``) describe the mirrored pair ``(c, dual_y)``.
    """

    pair: ChernPair
    effective: bool
    case: Case
    t: int | None = None
    split_a: int | None = None
    l: int | None = None
    luroth_gap: tuple[int, int, int] | None = None
    dual_y: int | None = None
    dual: "Classification | None" = field(default=None, compare=False, repr=False)

    def as_dict(self) -> dict:
        return {
            "c": self.pair.c,
            "y": self.pair.y,
            "effective": self.effective,
            "case": self.case.value,
            "t": self.t,
            "split_a": self.split_a,
            "l": self.l,
            "luroth_gap": list(self.luroth_gap) if self.luroth_gap else None,
            "dual_y": self.dual_y,
        }


def g_dual(c: int, y: int) -> ChernPair:
    """The G-dual pair ``(c, c**2 - y)``."""
    return ChernPair(c, c * c - y)


def split_factor(c: int, y: int) -> int | None:
    """Smallest ``a >= 1`` with ``y == a*(c - a)`` and ``a <= c - a``."""
    if c < 2 or y < c - 1 or 4 * y > c * c:
        return None
    # a(c-a) = y  <=>  a = (c - sqrt(c^2 - 4y)) / 2
    disc = c * c - 4 * y
    r = isqrt(disc)
    if r * r != disc or (c - r) % 2:
        return None
    return (c - r) // 2


def window_t(c: int, y: int) -> tuple[int, int | None]:
    """Window index ``t`` holding ``y`` and the split factor at an endpoint.

    Shared endpoints ``y = t(c-t)`` resolve to the smaller ``t``.
    """
    if c < 4:
        raise ValueError(f"windows are defined for c >= 4, got c={c}")
    if y < c - 1 or 4 * y >= c * c:
        raise ValueError(f"y={y} outside the unstable range [c-1, c^2/4) for c={c}")
    # y <= t(c-t) is increasing in t on t <= c/2; find the first t that works
    lo, hi = 2, c // 2
    while lo < hi:
        mid = (lo + hi) // 2
        if y <= mid * (c - mid):
            hi = mid
        else:
            lo = mid + 1
    t = lo
    assert (t - 1) * (c - t + 1) <= y <= t * (c - t)
    if y == t * (c - t):
        return t, t
    if y == (t - 1) * (c - t + 1):
        return t, t - 1
    return t, None


def in_window_interior(c: int, t: int, y: int) -> bool:
    return 2 <= t <= c // 2 and (t - 1) * (c - t + 1) < y < t * (c - t)


def residual_degree(c: int, t: int, y: int) -> int:
    """Degree ``c(t-1) - y`` of the line bundle cut on the degree ``t-1`` curve."""
    return c * (t - 1) - y


def is_admissible(c: int, t: int, y: int) -> bool:
    if not in_window_interior(c, t, y):
        raise ValueError(f"y={y} is not strictly inside window t={t} for c={c}")
    return luroth_contains(t - 1, residual_degree(c, t, y))


def _classify_unstable(c: int, y: int) -> Classification:
    """``c - 1 <= y`` and ``4y < c**2``."""
    pair = ChernPair(c, y)
    a = split_factor(c, y)
    t = window_t(c, y)[0] if c >= 4 else None
    if a is not None:
        return Classification(pair, True, Case.SPLIT_BOUNDARY, t=t, split_a=a)
    # every non-split y in the range has c >= 4 and lies inside a window
    l = residual_degree(c, t, y)
    if is_admissible(c, t, y):
        return Classification(pair, True, Case.WINDOW1_ADMISSIBLE, t=t, l=l)
    hit = luroth_gap_hit(t - 1, l) if l >= 0 else None
    return Classification(pair, False, Case.WINDOW1_GAP, t=t, l=l, luroth_gap=hit)


def classify(c: int, y: int) -> Classification:
    """Decide whether ``(c, y)`` is effective; total on all integer pairs."""
    c, y = int(c), int(y)
    pair = ChernPair(c, y)
    cc = c * c
    if c < 0 or y < 0:
        return Classification(pair, False, Case.BELOW_RANGE)
    if y > cc:
        return Classification(pair, False, Case.ABOVE_RANGE)
    if y == 0:
        return Classification(pair, True, Case.ZERO)
    if y == cc:
        return Classification(pair, True, Case.FULL)
    if y < c - 1:
        return Classification(pair, False, Case.BELOW_RANGE)
    if y > cc - c + 1:
        return Classification(pair, False, Case.ABOVE_RANGE)
    if 4 * y < cc:
        return _classify_unstable(c, y)
    if 4 * y <= 3 * cc:
        return Classification(pair, True, Case.STABLE)
    dual_y = cc - y
    inner = classify(c, dual_y)
    assert inner.case in (Case.SPLIT_BOUNDARY, Case.WINDOW1_ADMISSIBLE, Case.WINDOW1_GAP), inner
    return Classification(
        pair,
        inner.effective,
        Case.WINDOW3_DUAL,
        t=inner.t,
        split_a=inner.split_a,
        l=inner.l,
        luroth_gap=inner.luroth_gap,
        dual_y=dual_y,
        dual=inner,
    )


def is_effective(c: int, y: int) -> bool:
    return classify(c, y).effective


def effective_set(c: int) -> list[int]:
    if c < 0:
        raise ValueError("c must be >= 0")
    return [y for y in range(c * c + 1) if classify(c, y).effective]


def g_intervals(c: int, t: int) -> list[tuple[int, int, int]]:
    """The unclipped pieces ``(a, lo, hi)`` of ``G_t``; empty pieces omitted.

    ``a = 0`` is the negative-residual piece ``[c(t-1)+1, t(c-t)-1]``; the
    pieces ``a >= 1`` exist for ``t >= 4`` and ``a <= isqrt(t-3)``.
    """
    out = []
    lo, hi = c * (t - 1) + 1, t * (c - t) - 1
    if lo <= hi:
        out.append((0, lo, hi))
    if t >= 4:
        for a in range(1, isqrt(t - 3) + 1):
            lo = (t - 1) * (c - a) + a * a + 1
            hi = (t - 1) * (c - a + 1) - 1
            if lo <= hi:
                out.append((a, lo, hi))
    return out


@lru_cache(maxsize=1024)
def gap_set(c: int, clip: bool = True) -> IntervalList:
    """Non-effective ``y`` in the range ``c - 1 <= y < c**2/4``.

    Built from the closed-form ``G_t(a)`` intervals, each intersected with
    the open window of its own ``t``.  ``clip=False`` returns the literal
    union without that intersection; it overshoots (for ``c = 16`` it
    contains the effective values 62 and 63) and is kept for diagnostics.
    """
    if c < 4:
        return IntervalList()
    pieces = []
    for t in range(2, c // 2 + 1):
        for _, lo, hi in g_intervals(c, t):
            if clip:
                lo = max(lo, (t - 1) * (c - t + 1) + 1)
                hi = min(hi, t * (c - t) - 1)
            pieces.append((lo, hi))
    return IntervalList.of(pieces)


def euler_chi(c1: int, c2: int) -> int:
    return 2 + c1 * (c1 + 3) // 2 - c2


def stable_exists(c1: int, c2: int) -> bool:
    """Stable rank two bundles with these classes exist (discriminant test)."""
    disc = c1 * c1 - 4 * c2
    return disc < 0 and disc != -4


def le_potier_gg_moduli_nonempty(c1: int, c2: int) -> bool:
    """Whether a general stable bundle with classes ``(c1, c2)`` is globally generated."""
    if not stable_exists(c1, c2):
        return False
    return (c1 > 0 and euler_chi(c1, c2) >= 4) or (c1, c2) in ((1, 1), (2, 4))


def bidegrees(c: int) -> list[tuple[int, int]]:
    """Bidegrees ``(y, c**2 - y)`` of surfaces in G(1,3) with ``c1 = c``."""
    if c < 1:
        raise ValueError("c must be >= 1")
    return [(y, c * c - y) for y in effective_set(c)]


def embedding_bidegrees(c: int) -> list[tuple[int, int]]:
    return [(y, c * c - y) for cc, y in EMBEDDING_CHERN_PAIRS if cc == c]


def plane_genus(d: int) -> int:
    if d < 1:
        raise ValueError("degree must be >= 1")
    return (d - 1) * (d - 2) // 2


class Path(str, enum.Enum):
    SPLIT_BUNDLE = "SplitBundle"
    COMPLETE_INTERSECTION = "CompleteIntersection"
    SPECIAL_LINE_BUNDLE = "SpecialLineBundle"
    LINKED_FROM_R = "LinkedFromR"
    STABLE_RANGE = "StableRange"
    DUAL = "Dual"


@dataclass(frozen=True)
class ExistenceRecipe:
    """Which construction produces a bundle for an effective pair.

    ``t`` and ``l`` are the window and the degree of the line bundle ``L`` on
    the degree ``t-1`` curve; ``r`` is the number of points linked to the
    support of ``L`` when ``path`` is LinkedFromR.  A Dual recipe wraps the
    recipe of the mirrored pair in ``inner``.
    """

    path: Path
    t: int | None = None
    l: int | None = None
    r: int | None = None
    inner: "ExistenceRecipe | None" = None

    def __post_init__(self):
        if self.path is Path.LINKED_FROM_R:
            t, l, r = self.t, self.l, self.r
            assert l == (t - 1) ** 2 - r and 1 <= r <= t * (t + 1) // 2 - 3, self


def existence_recipe(c: int, y: int) -> ExistenceRecipe | None:
    """Construction route for an effective pair; None for gaps.

    Inside a window the route depends on ``l = c(t-1) - y`` against the genus
    ``g`` of the degree ``t-1`` curve: ``l = 0`` is a complete intersection,
    ``1 <= l <= g`` forces ``h1(L) != 0`` for a nontrivial globally generated
    ``L``, and ``g + 1 <= l <= (t-1)**2 - 1`` is reached by linking ``r``
    general points inside a complete intersection of two degree ``t-1`` curves.
    """
    cl = classify(c, y)
    if not cl.effective:
        return None
    if cl.case in (Case.ZERO, Case.FULL, Case.SPLIT_BOUNDARY):
        return ExistenceRecipe(Path.SPLIT_BUNDLE, t=cl.t)
    if cl.case is Case.STABLE:
        return ExistenceRecipe(Path.STABLE_RANGE)
    if cl.case is Case.WINDOW3_DUAL:
        return ExistenceRecipe(Path.DUAL, t=cl.t, l=cl.l, inner=existence_recipe(c, cl.dual_y))
    t, l = cl.t, cl.l
    g = plane_genus(t - 1)
    if l == 0:
        return ExistenceRecipe(Path.COMPLETE_INTERSECTION, t=t, l=l)
    if l <= g:
        return ExistenceRecipe(Path.SPECIAL_LINE_BUNDLE, t=t, l=l)
    return ExistenceRecipe(Path.LINKED_FROM_R, t=t, l=l, r=(t - 1) ** 2 - l)
