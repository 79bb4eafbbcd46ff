"""Seeded point-set generators for the property suites."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .linalg import FieldSpec
from .points import PointSet, normalize_point

GENERIC_CHECK_LIMIT = 12
RATIONAL_RANGE = 9


@dataclass(frozen=True)
class Generic:
    m: int


@dataclass(frozen=True)
class CollinearPlus:
    k: int
    m_extra: int


@dataclass(frozen=True)
class OnCurve:
    degree: int
    m: int


class GenerationError(RuntimeError):
    pass


def _det3(field, p, q, r):
    d = (
        p[0] * (q[1] * r[2] - q[2] * r[1])
        - p[1] * (q[0] * r[2] - q[2] * r[0])
        + p[2] * (q[0] * r[1] - q[1] * r[0])
    )
    return d % field.p if field.p is not None else d


def _random_point(field: FieldSpec, rng: random.Random):
    while True:
        if field.p is not None:
            coords = [rng.randrange(field.p) for _ in range(3)]
        else:
            coords = [rng.randint(-RATIONAL_RANGE, RATIONAL_RANGE) for _ in range(3)]
        if any(coords):
            return normalize_point(field, coords)


def _extend_generic(field, rng, pts, m, avoid_triples_with, max_tries):
    """Append ``m`` random points keeping every triple involving a new point non-collinear."""
    check = len(pts) + m <= GENERIC_CHECK_LIMIT
    tries = 0
    out = list(pts)
    while len(out) < len(pts) + m:
        tries += 1
        if tries > max_tries:
            raise GenerationError(f"could not place {m} generic points")
        q = _random_point(field, rng)
        if q in out or q in avoid_triples_with:
            continue
        if check and any(_det3(field, q, a, b) == 0 for a, b in combinations(out, 2)):
            continue
        out.append(q)
    return out


def gen_points(kind, field: FieldSpec, seed: int = 0, max_tries: int = 10000) -> PointSet:
    """Deterministic point set of the requested shape.

    ``Generic(m)``: no three collinear (checked up to 12 points).
    ``CollinearPlus(k, m_extra)``: ``k`` points on a random line, plus
    ``m_extra`` points off it with no collinear triple outside the line.
    ``OnCurve(degree, m)``: ``m`` smooth rational points of a random curve
    (prime fields only).
    """
    rng = random.Random(seed)
    if isinstance(kind, Generic):
        if kind.m < 0:
            raise ValueError("negative count")
        return PointSet(field, _extend_generic(field, rng, [], kind.m, (), max_tries))
    if isinstance(kind, CollinearPlus):
        return _collinear_plus(kind, field, rng, max_tries)
    if isinstance(kind, OnCurve):
        return _on_curve(kind, field, rng, max_tries)
    raise TypeError(f"unknown point-set kind {kind!r}")


def _collinear_plus(kind, field, rng, max_tries):
    if kind.k < 0 or kind.m_extra < 0:
        raise ValueError("negative count")
    if field.p is not None and kind.k > field.p + 1:
        raise ValueError("a line over F_p has only p + 1 points")
    P = _random_point(field, rng)
    Q = _random_point(field, rng)
    while Q == P:
        Q = _random_point(field, rng)
    line = []
    seen = set()
    while len(line) < kind.k:
        if field.p is not None:
            s, t = rng.randrange(field.p), rng.randrange(field.p)
        else:
            s, t = rng.randint(-RATIONAL_RANGE, RATIONAL_RANGE), rng.randint(-RATIONAL_RANGE, RATIONAL_RANGE)
        if s == 0 and t == 0:
            continue
        pt = normalize_point(field, [s * a + t * b for a, b in zip(P, Q)])
        if pt not in seen:
            seen.add(pt)
            line.append(pt)
    # a point is on the line iff det(P, Q, pt) = 0
    on_line = lambda q: _det3(field, P, Q, q) == 0
    out = list(line)
    tries = 0
    while len(out) < kind.k + kind.m_extra:
        tries += 1
        if tries > max_tries:
            raise GenerationError("could not place the extra points")
        q = _random_point(field, rng)
        if q in out or on_line(q):
            continue
        if any(_det3(field, q, a, b) == 0 for a, b in combinations(out, 2)):
            continue
        out.append(q)
    return PointSet(field, out)


def _on_curve(kind, field, rng, max_tries):
    from .liaison import random_form
    from .ratpoints import common_zeros

    if field.p is None:
        raise ValueError("OnCurve sampling needs a prime field")
    if kind.degree < 1 or kind.m < 0:
        raise ValueError("bad OnCurve parameters")
    field.check_degree(kind.degree)
    for _ in range(max(1, max_tries // 100)):
        f = random_form(field, kind.degree, rng)
        smooth = [pt for pt in common_zeros([f]) if any(f.gradient(pt))]
        if len(smooth) >= kind.m:
            return PointSet(field, sorted(rng.sample(smooth, kind.m)))
    raise GenerationError(f"no curve of degree {kind.degree} with {kind.m} smooth rational points")
