"""Exact linear algebra over prime fields and the rationals.

Prime-field scalars are plain ints in ``[0, p)``; rational scalars are
:class:`fractions.Fraction` (which keeps lowest terms and a positive
denominator).  Rational elimination is fraction-free: rows are cleared of
denominators once, then reduced with Bareiss' exact-division update.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

DEFAULT_PRIME = 101


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either ``F_p`` (``p`` prime, ``p >= 5``) or the rationals (``p is None``)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not (self.p >= 5 and is_prime(self.p)):
            raise ValueError(f"field characteristic must be a prime >= 5, got {self.p}")

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME) -> "FieldSpec":
        return cls(int(p))

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls(None)

    @property
    def is_prime(self) -> bool:
        return self.p is not None

    def __call__(self, x) -> int | Fraction:
        """Coerce an int, Fraction, or ``"num/den"`` string into the field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, bool):
            raise TypeError("booleans are not field scalars")
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in F_{self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.p is None:
            return 1 / Fraction(x)
        return pow(x, -1, self.p)

    def div(self, x, y):
        if self.p is None:
            return Fraction(x) / y
        return x * pow(y, -1, self.p) % self.p

    def check_scalar(self, x) -> None:
        if self.p is None:
            if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
                raise TypeError(f"{x!r} is not a rational scalar")
        elif isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < self.p:
            raise TypeError(f"{x!r} is not a residue in F_{self.p}")

    def check_degree(self, n: int) -> None:
        """Derivatives and Bezout counts need ``p > n``."""
        if self.p is not None and n >= self.p:
            raise ValueError(f"degree {n} is too large for F_{self.p}")

    def __str__(self) -> str:
        return "QQ" if self.p is None else f"F_{self.p}"


class Matrix:
    """Dense row-major matrix whose entries all live in one field."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: FieldSpec, rows: int, cols: int, entries: Sequence):
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        for x in entries:
            try:
                field.check_scalar(x)
            except TypeError as exc:
                raise ValueError(f"entry outside {field}: {exc}") from None
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Sequence], cols: int | None = None) -> "Matrix":
        data = [[field(x) for x in row] for row in rows]
        ncols = len(data[0]) if data else (cols or 0)
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        return cls(field, len(data), ncols, [x for r in data for x in r])

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        return cls.from_rows(field, [[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, [field(0)] * (rows * cols))

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def apply(self, v: Sequence) -> list:
        """Matrix-vector product ``M v``."""
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        p = self.field.p
        out = []
        for i in range(self.rows):
            s = sum(a * b for a, b in zip(self.row(i), v))
            out.append(s % p if p is not None else s)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and (self.field, self.rows, self.cols, self.entries)
            == (other.field, other.rows, other.cols, other.entries)
        )

    def __repr__(self):
        return f"Matrix({self.field}, {self.rows}x{self.cols})"


def _rref_mod_p(rows: list[list[int]], ncols: int, p: int) -> list[int]:
    """Reduce in place to RREF over F_p; returns pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        pr = rows[r]
        for i in range(len(rows)):
            f = rows[i][c]
            if i != r and f:
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def _integer_rows(m: Matrix) -> list[list[int]]:
    """Rows scaled by the lcm of their denominators (rank-preserving)."""
    out = []
    for i in range(m.rows):
        row = [Fraction(x) for x in m.row(i)]
        den = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * den) for x in row])
    return out


def _bareiss(rows: list[list[int]], ncols: int, full: bool) -> tuple[list[int], int]:
    """Fraction-free Gaussian (``full=False``) or Gauss-Jordan elimination.

    Works in place on integer rows.  Returns the pivot columns and the last
    pivot; after Gauss-Jordan every pivot entry equals that last pivot.
    """
    pivots = []
    prev = 1
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        d = pr[c]
        targets = range(nrows) if full else range(r + 1, nrows)
        for i in targets:
            if i == r:
                continue
            f = rows[i][c]
            rows[i] = [(d * x - f * y) // prev for x, y in zip(rows[i], pr)]
        prev = d
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots, prev


def mat_rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.field.p is not None:
        return len(_rref_mod_p(m.to_rows(), m.cols, m.field.p))
    return len(_bareiss(_integer_rows(m), m.cols, full=False)[0])


def _normalize_leading(v: list, field: FieldSpec) -> list:
    lead = next(x for x in v if x != 0)
    if field.p is None:
        return [Fraction(x) / lead for x in v]
    inv = pow(lead, -1, field.p)
    return [x * inv % field.p for x in v]


def kernel_basis(m: Matrix) -> list[list]:
    """Basis of ``{v : M v = 0}``, each vector scaled to a leading 1.

    Vectors come in order of their free column, so the basis is canonical
    for a given matrix.
    """
    f = m.field
    if m.rows == 0:
        return [[f(int(i == j)) for i in range(m.cols)] for j in range(m.cols)]
    if f.p is not None:
        rows = m.to_rows()
        pivots = _rref_mod_p(rows, m.cols, f.p)
        scale = 1
    else:
        rows = _integer_rows(m)
        pivots, scale = _bareiss(rows, m.cols, full=True)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [0] * m.cols
        v[free] = scale
        for i, pc in enumerate(pivots):
            assert rows[i][pc] == scale
            v[pc] = -rows[i][free]
        if f.p is not None:
            v = [x % f.p for x in v]
        basis.append(_normalize_leading(v, f))
    return basis
