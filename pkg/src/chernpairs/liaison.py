"""Transverse complete intersections, residual liaison, and instance checkers.

The checkers take a concrete point set, evaluate each hypothesis of a
vanishing statement about Cayley-Bacharach, evaluate the conclusion, and
flag a violation when the hypotheses hold but the conclusion fails.  A
violation would be a counterexample; the property suites expect none.
"""

from __future__ import annotations

import random
from math import factorial
from dataclasses import asdict, dataclass, field
from typing import NamedTuple

from .globalgen import is_gg
from .linalg import FieldSpec
from .points import (
    CurveForm,
    PointSet,
    character_gap_indices,
    h0_ideal,
    is_cb,
    monomial_basis,
    numerical_character,
)
from .ratpoints import common_zeros


class InstanceGenerationError(RuntimeError):
    """Seeded sampling ran out of tries."""


class CompleteIntersection(NamedTuple):
    F: CurveForm
    G: CurveForm
    X: PointSet


def _poly_mul(f: dict, g: dict, p: int) -> dict:
    out: dict = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
            out[e] = (out.get(e, 0) + c1 * c2) % p
    return out


def _to_form(field: FieldSpec, poly: dict, n: int) -> CurveForm:
    return CurveForm(field, n, tuple(poly.get(e, 0) for e in monomial_basis(n)))


def random_form(field: FieldSpec, n: int, rng: random.Random) -> CurveForm:
    while True:
        coeffs = tuple(rng.randrange(field.p) for _ in monomial_basis(n))
        if any(coeffs):
            return CurveForm(field, n, coeffs)


def random_line_product(field: FieldSpec, n: int, rng: random.Random) -> CurveForm:
    poly = {(0, 0, 0): 1}
    for _ in range(n):
        lin = random_form(field, 1, rng)
        poly = _poly_mul(poly, dict(zip(monomial_basis(1), lin.coefficients)), field.p)
    return _to_form(field, poly, n)


def is_transverse_at(F: CurveForm, G: CurveForm, pt) -> bool:
    """Nonsingular 2x2 Jacobian of ``(F, G)`` in the affine chart around ``pt``."""
    chart = next(i for i, x in enumerate(pt) if x != 0)
    u, v = [i for i in range(3) if i != chart]
    gf, gg = F.gradient(pt), G.gradient(pt)
    det = gf[u] * gg[v] - gf[v] * gg[u]
    p = F.field.p
    return (det % p if p is not None else det) != 0


def make_transverse_ci(a: int, b: int, field: FieldSpec, seed: int = 0, max_tries: int = 5000) -> CompleteIntersection:
    """Sample curves of degrees ``a`` and ``b`` meeting in ``a*b`` rational transverse points.

    One curve is drawn as a product of random lines and the other as a random
    form; a draw is kept only when the full scan of rational points finds
    exactly ``a*b`` common zeros, each with a nonsingular Jacobian.  Two
    random curves of degree >= 2 almost never meet in rational points only,
    hence the split factor.  Each line must meet the random curve of degree
    ``k`` in ``k`` rational points (about ``1/k!`` of the time), so the split
    goes on whichever side makes that likelier.
    """
    if not field.is_prime:
        raise ValueError("complete intersections are sampled over a prime field")
    if a < 1 or b < 1:
        raise ValueError("degrees must be >= 1")
    if a * b > field.p:
        raise ValueError(f"a*b = {a * b} exceeds p = {field.p}")
    field.check_degree(max(a, b))
    rng = random.Random(seed)
    split_a = factorial(b) ** a < factorial(a) ** b
    for _ in range(max_tries):
        if split_a:
            F, G = random_line_product(field, a, rng), random_form(field, b, rng)
        else:
            F, G = random_form(field, a, rng), random_line_product(field, b, rng)
        zeros = common_zeros([F, G])
        if len(zeros) != a * b:
            continue
        if all(is_transverse_at(F, G, pt) for pt in zeros):
            return CompleteIntersection(F, G, PointSet(field, zeros))
    raise InstanceGenerationError(f"no transverse CI({a},{b}) over {field} within {max_tries} tries (seed {seed})")


def ci_residual(F: CurveForm, G: CurveForm, X: PointSet, Z: PointSet) -> PointSet:
    """Points of the complete intersection ``X`` not in ``Z``."""
    missing = [pt for pt in Z.points if pt not in X]
    if missing:
        raise ValueError(f"{len(missing)} point(s) of Z are not in the complete intersection")
    return X.minus(Z)


@dataclass
class Report:
    """Hypotheses, conclusion and verdict of one checker run."""

    check: str
    hypotheses: dict = field(default_factory=dict)
    hypotheses_hold: bool = False
    conclusion: bool | None = None
    skipped: str | None = None
    violation: bool = False
    data: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return asdict(self)


def _pts(points) -> list[list[str]]:
    return [[str(x) for x in pt] for pt in points]


def check_cb_residuel_instance(Y: PointSet, Z: PointSet, a: int, b: int, F: CurveForm, G: CurveForm) -> Report:
    """If ``Y``, ``Z`` are linked by a CI of type (a, b), disjoint, and
    ``I_Y(a)`` is globally generated, then ``Z`` has CB(b - 3)."""
    rep = Report("cb_residual", data={"a": a, "b": b, "deg_Y": Y.degree, "deg_Z": Z.degree})
    union = Y.points + Z.points
    ci_ok = (
        F.degree == a
        and G.degree == b
        and len(set(union)) == a * b
        and all(F(pt) == 0 and G(pt) == 0 for pt in union)
        and all(is_transverse_at(F, G, pt) for pt in union)
    )
    rep.hypotheses["complete_intersection"] = ci_ok
    rep.hypotheses["disjoint"] = not set(Y.points) & set(Z.points)
    if not ci_ok:
        rep.skipped = "Y and Z are not the two halves of the given complete intersection"
        return rep
    if not Y.points:
        rep.skipped = "Y is empty, global generation of I_Y(a) is undefined"
        return rep
    gg = is_gg(Y, a)
    rep.hypotheses["gg_verdict"] = gg.verdict.value
    rep.hypotheses_hold = rep.hypotheses["disjoint"] and gg.generated
    cb = is_cb(Z, b - 3)
    rep.conclusion = cb.holds
    if cb.witness is not None:
        rep.data["witness_point"] = [str(x) for x in cb.witness[0]]
    rep.violation = rep.hypotheses_hold and not cb.holds
    return rep


def check_exist_gaps_instance(Z: PointSet, d: int, a: int) -> Report:
    """If ``d >= a**2 + 2``, no curve of degree ``a - 1`` contains ``Z``,
    ``(a-1)d + 1 <= deg Z <= a(d-a) - 1`` and ``Z`` lies on a degree ``d``
    curve, then ``Z`` fails CB(d - 3)."""
    rep = Report("exist_gaps", data={"d": d, "a": a, "deg_Z": Z.degree})
    if not Z.points:
        rep.skipped = "empty point set"
        return rep
    h = rep.hypotheses
    h["d_large"] = d >= a * a + 2
    h["no_curve_of_degree_a_minus_1"] = h0_ideal(Z, a - 1) == 0
    h["degree_window"] = (a - 1) * d + 1 <= Z.degree <= a * (d - a) - 1
    h["on_degree_d_curve"] = h0_ideal(Z, d) > 0
    rep.hypotheses_hold = all(h.values())
    if d - 3 <= 0:
        rep.skipped = "CB(n) is vacuous for n <= 0; conclusion untestable"
        return rep
    cb = is_cb(Z, d - 3)
    rep.conclusion = not cb.holds
    rep.violation = rep.hypotheses_hold and cb.holds
    return rep


def check_trou_instance(Z: PointSet) -> Report:
    """For each gap ``n_{r-1} > n_r + 1`` of the numerical character, ``Z``
    fails CB(n_r - 1)."""
    ch = numerical_character(Z)
    gaps = character_gap_indices(ch)
    rep = Report("character_gap", data={"character": list(ch.entries), "gap_indices": gaps})
    rep.hypotheses["has_gap"] = bool(gaps)
    rep.hypotheses_hold = bool(gaps)
    if not gaps:
        rep.skipped = "connected character, nothing to check"
        return rep
    failures = {}
    for r in gaps:
        n = ch.entries[r] - 1
        failures[n] = not is_cb(Z, n).holds
    rep.data["fails_cb"] = {str(k): v for k, v in failures.items()}
    rep.conclusion = all(failures.values())
    rep.violation = not rep.conclusion
    return rep
