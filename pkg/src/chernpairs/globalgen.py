"""Global generation of twisted ideal sheaves ``I_Z(n)`` of reduced point sets."""

from __future__ import annotations

import enum
import random
from typing import NamedTuple

import numpy as np

from .linalg import Matrix, mat_rank
from .points import PointSet, curves_through, h0_ideal, normalize_point
from .ratpoints import evaluate_everywhere, rational_points

DEFAULT_PROBES = 200


class GGVerdict(str, enum.Enum):
    GENERATED = "Generated"
    NOT_GENERATED_LOCAL = "NotGeneratedLocal"
    BASE_POINT_FOUND = "BasePointFound"
    NO_RATIONAL_OBSTRUCTION = "NoRationalObstruction"


class GGResult(NamedTuple):
    verdict: GGVerdict
    point: tuple | None
    details: dict

    @property
    def generated(self) -> bool:
        return self.verdict is GGVerdict.GENERATED


def _locally_generated(Z: PointSet, forms, pt) -> bool:
    # affine chart at the first nonzero coordinate (which is 1 after normalization)
    chart = next(i for i, x in enumerate(pt) if x != 0)
    keep = [i for i in range(3) if i != chart]
    rows = [[g[i] for i in keep] for g in (f.gradient(pt) for f in forms)]
    return mat_rank(Matrix.from_rows(Z.field, rows)) == 2


def is_gg(Z: PointSet, n: int, seed: int = 0, probes: int = DEFAULT_PROBES) -> GGResult:
    """Test whether the degree-``n`` curves through ``Z`` generate ``I_Z(n)``.

    Two checks: the curves' differentials span the cotangent plane at each
    point of ``Z``, and the curves have no common zero off ``Z``.  Over
    ``F_p`` the second check scans every rational point, so ``Generated``
    means no rational obstruction exists; base points defined only over an
    extension are invisible.  Over the rationals it probes ``probes`` seeded
    random points and at best reports ``NoRationalObstruction``.
    """
    if not Z.points:
        raise ValueError("global generation is tested on nonempty point sets")
    if n < 1:
        raise ValueError("degree must be >= 1")
    Z.field.check_degree(n)
    h0 = h0_ideal(Z, n)
    if h0 == 0:
        raise ValueError(f"no curves of degree {n} contain the point set")
    forms = curves_through(Z, n)
    details = {"degree": n, "h0": h0}
    for pt in Z.points:
        if not _locally_generated(Z, forms, pt):
            details["local"] = False
            return GGResult(GGVerdict.NOT_GENERATED_LOCAL, pt, details)
    details["local"] = True

    if Z.field.is_prime:
        p = Z.field.p
        zero = ~(evaluate_everywhere(forms) != 0).any(axis=1)
        inside = set(Z.points)
        details["scan"] = "exhaustive"
        details["scanned"] = int(rational_points(p).shape[0]) - len(Z)
        for idx in np.flatnonzero(zero):
            q = tuple(int(v) for v in rational_points(p)[idx])
            if q not in inside:
                return GGResult(GGVerdict.BASE_POINT_FOUND, q, details)
        return GGResult(GGVerdict.GENERATED, None, details)

    rng = random.Random(seed)
    details["scan"] = "probe"
    details["scanned"] = probes
    for _ in range(probes):
        coords = [rng.randint(-50, 50) for _ in range(3)]
        if not any(coords):
            continue
        if coords in Z:
            continue
        if all(f(coords) == 0 for f in forms):
            return GGResult(GGVerdict.BASE_POINT_FOUND, normalize_point(Z.field, coords), details)
    return GGResult(GGVerdict.NO_RATIONAL_OBSTRUCTION, None, details)
