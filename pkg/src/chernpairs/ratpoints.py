"""Vectorized evaluation of forms at every rational point of P^2(F_p)."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .points import CurveForm, monomial_basis


@lru_cache(maxsize=8)
def rational_points(p: int) -> np.ndarray:
    """All ``p**2 + p + 1`` normalized points, rows in lexicographic order."""
    r = np.arange(p, dtype=np.int64)
    yy, zz = np.meshgrid(r, r, indexing="ij")
    pts = np.concatenate(
        [
            np.array([[0, 0, 1]], dtype=np.int64),
            np.stack([np.zeros(p, np.int64), np.ones(p, np.int64), r], axis=1),
            np.stack([np.ones(p * p, np.int64), yy.ravel(), zz.ravel()], axis=1),
        ]
    )
    pts.setflags(write=False)
    return pts


@lru_cache(maxsize=32)
def monomial_table(p: int, n: int) -> np.ndarray:
    """``T[q, m]`` = monomial ``m`` of degree ``n`` at rational point ``q``, mod ``p``."""
    pts = rational_points(p)
    powers = np.ones((pts.shape[0], 3, n + 1), dtype=np.int64)
    for e in range(1, n + 1):
        powers[:, :, e] = powers[:, :, e - 1] * pts % p
    cols = [
        powers[:, 0, i] * powers[:, 1, j] % p * powers[:, 2, k] % p
        for i, j, k in monomial_basis(n)
    ]
    table = np.stack(cols, axis=1)
    table.setflags(write=False)
    return table


def evaluate_everywhere(forms: list[CurveForm]) -> np.ndarray:
    """``V[q, f]``: value of each form at each rational point (same degree, same field)."""
    if not forms:
        raise ValueError("no forms given")
    p, n = forms[0].field.p, forms[0].degree
    if p is None or any(f.field.p != p or f.degree != n for f in forms):
        raise ValueError("forms must share a prime field and a degree")
    coeffs = np.array([f.coefficients for f in forms], dtype=np.int64).T
    return monomial_table(p, n) @ coeffs % p


def common_zeros(forms: list[CurveForm]) -> list[tuple[int, int, int]]:
    """Rational points where all the given forms vanish, in lexicographic order.

    Forms may have different degrees.
    """
    p = forms[0].field.p
    mask = np.ones(rational_points(p).shape[0], dtype=bool)
    for f in forms:
        mask &= evaluate_everywhere([f])[:, 0] == 0
    return [tuple(int(v) for v in row) for row in rational_points(p)[mask]]
