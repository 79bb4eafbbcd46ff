"""Reduced zero-dimensional subschemes of the projective plane.

A :class:`PointSet` is a finite set of distinct points with exact
coordinates.  Every invariant here is a rank computation on the evaluation
matrix (points x degree-``n`` monomials): its rank is the Hilbert function
``H(Z, n)``, its kernel is the space of degree-``n`` curves through ``Z``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .linalg import FieldSpec, Matrix, kernel_basis, mat_rank

Point = tuple  # three field scalars, first nonzero coordinate equal to 1


def normalize_point(field: FieldSpec, coords: Sequence) -> Point:
    if len(coords) != 3:
        raise ValueError(f"a plane point has 3 coordinates, got {len(coords)}")
    xs = [field(x) for x in coords]
    lead = next((x for x in xs if x != 0), None)
    if lead is None:
        raise ValueError("(0:0:0) is not a point")
    return tuple(field.div(x, lead) for x in xs)


class PointSet:
    """Distinct points of the plane over one field; ``degree`` is their count."""

    __slots__ = ("field", "points", "_index")

    def __init__(self, field: FieldSpec, points: Iterable[Sequence] = ()):
        self.field = field
        pts = []
        index = {}
        for i, coords in enumerate(points):
            pt = normalize_point(field, coords)
            if pt in index:
                raise DuplicatePointError(i, index[pt])
            index[pt] = i
            pts.append(pt)
        self.points: tuple[Point, ...] = tuple(pts)
        self._index = index

    @property
    def degree(self) -> int:
        return len(self.points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, pt) -> bool:
        return normalize_point(self.field, pt) in self._index

    def __eq__(self, other):
        return isinstance(other, PointSet) and self.field == other.field and self.points == other.points

    def __hash__(self):
        return hash((self.field, self.points))

    def __repr__(self):
        return f"PointSet({self.field}, {len(self.points)} points)"

    def without(self, pt) -> "PointSet":
        pt = normalize_point(self.field, pt)
        return PointSet(self.field, [q for q in self.points if q != pt])

    def with_point(self, pt) -> "PointSet":
        return PointSet(self.field, self.points + (pt,))

    def minus(self, other: "PointSet") -> "PointSet":
        drop = set(other.points)
        return PointSet(self.field, [q for q in self.points if q not in drop])

    def union(self, other: "PointSet") -> "PointSet":
        return PointSet(self.field, self.points + other.points)


class DuplicatePointError(ValueError):
    def __init__(self, index: int, first: int):
        super().__init__(f"point {index} duplicates point {first}")
        self.index = index
        self.first = first


@lru_cache(maxsize=None)
def monomial_basis(n: int) -> tuple[tuple[int, int, int], ...]:
    """Exponents ``(i, j, k)`` with ``i + j + k = n``, by decreasing ``i`` then ``j``."""
    if n < 0:
        raise ValueError("monomial degree must be >= 0")
    return tuple((i, j, n - i - j) for i in range(n, -1, -1) for j in range(n - i, -1, -1))


def monomial_values(field: FieldSpec, pt: Point, n: int) -> list:
    x, y, z = pt
    p = field.p
    if p is None:
        return [x**i * y**j * z**k for i, j, k in monomial_basis(n)]
    return [pow(x, i, p) * pow(y, j, p) * pow(z, k, p) % p for i, j, k in monomial_basis(n)]


@dataclass(frozen=True)
class CurveForm:
    """A nonzero form of degree ``degree`` in the graded-lex monomial basis."""

    field: FieldSpec
    degree: int
    coefficients: tuple

    def __post_init__(self):
        if len(self.coefficients) != len(monomial_basis(self.degree)):
            raise ValueError("coefficient vector does not match the monomial basis")
        if all(c == 0 for c in self.coefficients):
            raise ValueError("the zero form is not a curve")

    def __call__(self, pt: Sequence):
        vals = monomial_values(self.field, tuple(self.field(x) for x in pt), self.degree)
        s = sum(c * v for c, v in zip(self.coefficients, vals))
        return s % self.field.p if self.field.p is not None else s

    def gradient(self, pt: Sequence) -> list:
        """The three partial derivatives evaluated at ``pt``."""
        f = self.field
        x = [f(v) for v in pt]
        grad = []
        for var in range(3):
            s = 0
            for c, exps in zip(self.coefficients, monomial_basis(self.degree)):
                e = exps[var]
                if c == 0 or e == 0:
                    continue
                term = c * e
                for k in range(3):
                    ek = exps[k] - (k == var)
                    term *= x[k] ** ek
                s += term
            grad.append(s % f.p if f.p is not None else s)
        return grad

    def __str__(self) -> str:
        names = "xyz"
        terms = []
        for c, exps in zip(self.coefficients, monomial_basis(self.degree)):
            if c == 0:
                continue
            mono = "*".join(f"{names[k]}^{e}" if e > 1 else names[k] for k, e in enumerate(exps) if e)
            terms.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(terms)


def evaluation_matrix(Z: PointSet, n: int) -> Matrix:
    if n < 0:
        raise ValueError("degree must be >= 0")
    Z.field.check_degree(n)
    ncols = len(monomial_basis(n))
    entries = [v for pt in Z.points for v in monomial_values(Z.field, pt, n)]
    return Matrix(Z.field, len(Z.points), ncols, entries)


def hilbert(Z: PointSet, n: int) -> int:
    """``H(Z, n)``: the number of conditions ``Z`` imposes on degree-``n`` curves."""
    if n < 0 or not Z.points:
        return 0
    return mat_rank(evaluation_matrix(Z, n))


def h0_ideal(Z: PointSet, n: int) -> int:
    """Dimension of the space of degree-``n`` curves through ``Z``."""
    if n < 0:
        return 0
    return max(0, (n + 1) * (n + 2) // 2 - hilbert(Z, n))


def h1_ideal(Z: PointSet, n: int) -> int:
    """Failure of ``Z`` to impose independent conditions in degree ``n``."""
    return Z.degree - hilbert(Z, n)


def hilbert_function(Z: PointSet, upto: int) -> list[int]:
    """``[H(Z, 0), ..., H(Z, upto)]``; ranks stop once ``H`` reaches ``deg Z``."""
    out = []
    for n in range(upto + 1):
        if out and out[-1] == Z.degree:
            out.append(Z.degree)
        else:
            out.append(hilbert(Z, n))
    return out


def curves_through(Z: PointSet, n: int) -> list[CurveForm]:
    """Canonical basis of the degree-``n`` curves containing ``Z``."""
    if n < 0:
        return []
    if not Z.points:
        m = len(monomial_basis(n))
        return [CurveForm(Z.field, n, tuple(Z.field(int(i == j)) for i in range(m))) for j in range(m)]
    return [CurveForm(Z.field, n, tuple(v)) for v in kernel_basis(evaluation_matrix(Z, n))]


def sigma(Z: PointSet) -> int:
    """Least degree of a curve containing ``Z``."""
    if not Z.points:
        raise ValueError("sigma is undefined for the empty set")
    n = 1
    while h0_ideal(Z, n) == 0:
        n += 1
    return n


class CharacterError(ArithmeticError):
    """A computed numerical character contradicts the rank computations."""


@dataclass(frozen=True)
class NumericalCharacter:
    entries: tuple[int, ...]

    @property
    def sigma(self) -> int:
        return len(self.entries)

    @property
    def degree(self) -> int:
        return sum(n - i for i, n in enumerate(self.entries))

    def h1(self, n: int) -> int:
        """``h1(I_Z(n))`` read off the character."""
        pos = lambda v: v if v > 0 else 0
        return sum(pos(ni - n - 1) - pos(i - n - 1) for i, ni in enumerate(self.entries))

    def is_valid(self) -> bool:
        e = self.entries
        return bool(e) and all(a >= b for a, b in zip(e, e[1:])) and e[-1] >= len(e)

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"


def difference_function(Z: PointSet) -> list[int]:
    """``Delta(i) = H(i) - H(i-1)`` for ``i = 0 .. deg Z``."""
    H = hilbert_function(Z, Z.degree)
    return [H[0]] + [H[i] - H[i - 1] for i in range(1, len(H))]


def numerical_character(Z: PointSet, check: bool = True) -> NumericalCharacter:
    """``(n_0, ..., n_{sigma-1})`` with ``n_i = min{t >= i : Delta(t) <= i}``.

    With ``check`` the result is validated against the ranks it came from:
    the ordering conditions, ``sum(n_i - i) == deg Z``, and the ``h1``
    formula for every ``0 <= n <= n_0``.
    """
    if not Z.points:
        raise ValueError("the empty set has no numerical character")
    delta = difference_function(Z)
    s = sigma(Z)

    def d(t):
        return delta[t] if t < len(delta) else 0

    entries = []
    for i in range(s):
        t = i
        while d(t) > i:
            t += 1
        entries.append(t)
    ch = NumericalCharacter(tuple(entries))
    if check:
        if not ch.is_valid() or ch.degree != Z.degree:
            raise CharacterError(f"invalid character {ch} for {Z!r}")
        H = hilbert_function(Z, ch.entries[0])
        for n in range(ch.entries[0] + 1):
            if ch.h1(n) != Z.degree - H[n]:
                raise CharacterError(f"h1 mismatch at n={n} for character {ch}")
    return ch


def character_gap_indices(ch: NumericalCharacter | Sequence[int]) -> list[int]:
    e = ch.entries if isinstance(ch, NumericalCharacter) else tuple(ch)
    return [r for r in range(1, len(e)) if e[r - 1] > e[r] + 1]


def character_is_connected(ch: NumericalCharacter | Sequence[int]) -> bool:
    return not character_gap_indices(ch)


class CBResult(NamedTuple):
    holds: bool
    witness: tuple[Point, CurveForm] | None = None


def is_cb(Z: PointSet, n: int) -> CBResult:
    """Cayley-Bacharach for degree ``n`` curves.

    Holds when every degree-``n`` curve through all points but one also
    passes through the last one.  Vacuously true for ``n <= 0`` and for the
    empty set.  On failure the witness is the first offending point together
    with a curve through the others that misses it.
    """
    if n <= 0 or not Z.points:
        return CBResult(True)
    full = hilbert(Z, n)
    for pt in Z.points:
        rest = Z.without(pt)
        if hilbert(rest, n) == full:
            continue
        for curve in curves_through(rest, n):
            if curve(pt) != 0:
                return CBResult(False, (pt, curve))
        raise AssertionError("rank drop without a separating curve")
    return CBResult(True)
