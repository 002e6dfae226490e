"""Exact dense linear algebra over the rationals.

Every structural conclusion in this package is an integer rank equality, so
nothing here ever touches floating point.  Entries are ``fractions.Fraction``
(arbitrary-precision numerator/denominator, always reduced).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable row-major matrix of Fractions."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], cols: int | None = None) -> RationalMatrix:
        data = [[Fraction(x) for x in row] for row in rows]
        if cols is None:
            if not data:
                raise ValueError("cols is required for a matrix with no rows")
            cols = len(data[0])
        for row in data:
            if len(row) != cols:
                raise ValueError("ragged rows")
        return cls(len(data), cols, tuple(x for row in data for x in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> RationalMatrix:
        return cls.from_rows(
            ([col[i] for col in columns] for i in range(rows)), cols=len(columns)
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls.from_rows(
            ([1 if i == j else 0 for j in range(n)] for i in range(n)), cols=n
        )

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(index)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> RationalMatrix:
        return RationalMatrix.from_rows(
            (self.column(j) for j in range(self.cols)), cols=self.rows
        )

    def select_columns(self, indices: Sequence[int]) -> RationalMatrix:
        return RationalMatrix.from_rows(
            ([self[i, j] for j in indices] for i in range(self.rows)), cols=len(indices)
        )

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for i in range(self.rows):
            row = self.row(i)
            out.append([
                sum((row[k] * other[k, j] for k in range(self.cols) if row[k]), Fraction(0))
                for j in range(other.cols)
            ])
        return RationalMatrix.from_rows(out, cols=other.cols)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __str__(self) -> str:
        cells = [[str(x) for x in self.row(i)] for i in range(self.rows)]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def _as_matrix(m) -> RationalMatrix:
    if isinstance(m, RationalMatrix):
        return m
    return RationalMatrix.from_rows(m)


def rref(m: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    """Reduced row-echelon form and the ascending list of pivot columns."""
    m = _as_matrix(m)
    a = m.to_rows()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        lead = a[r][c]
        if lead != 1:
            a[r] = [x / lead for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return RationalMatrix.from_rows(a, cols=m.cols), pivots


def rank(m: RationalMatrix) -> int:
    return len(rref(m)[1])


def nullspace_basis(m: RationalMatrix) -> RationalMatrix:
    """Canonical kernel basis, one basis vector per column.

    Built from the RREF: for each free column f (ascending) the vector has
    a 1 at f, zeros at the other free columns, and the negated RREF entries
    at the pivot positions.
    """
    m = _as_matrix(m)
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    columns = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i, f]
        columns.append(v)
    return RationalMatrix.from_columns(columns, rows=m.cols)
