"""Dense rational matrices with exact Gaussian elimination."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable dense matrix of fractions; ``rows`` may be zero."""

    entries: tuple[Vector, ...]
    cols: int

    def __post_init__(self) -> None:
        if self.cols < 0:
            raise ValueError("column count must be non-negative")
        for index, row in enumerate(self.entries):
            if len(row) != self.cols:
                raise ValueError(f"row {index} has {len(row)} entries, expected {self.cols}")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @classmethod
    def from_rows(
        cls,
        rows: Iterable[Sequence[int | Fraction]],
        cols: int | None = None,
    ) -> RationalMatrix:
        """Build a matrix; ``cols`` is required when ``rows`` is empty."""

        entries = tuple(tuple(Fraction(value) for value in row) for row in rows)
        if cols is None:
            if not entries:
                raise ValueError("cols must be given for a matrix without rows")
            cols = len(entries[0])
        return cls(entries=entries, cols=cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls.from_rows(([0] * cols for _ in range(rows)), cols=cols)

    @classmethod
    def identity(cls, size: int) -> RationalMatrix:
        return cls.from_rows(
            ([1 if r == c else 0 for c in range(size)] for r in range(size)),
            cols=size,
        )

    def vstack(self, other: RationalMatrix) -> RationalMatrix:
        if other.cols != self.cols:
            raise ValueError(f"cannot stack {self.cols} columns on {other.cols} columns")
        return RationalMatrix(entries=self.entries + other.entries, cols=self.cols)

    def matvec(self, vector: Sequence[int | Fraction]) -> Vector:
        if len(vector) != self.cols:
            raise ValueError(f"vector has {len(vector)} entries, expected {self.cols}")
        return tuple(
            sum((a * b for a, b in zip(row, vector, strict=True) if a), Fraction(0))
            for row in self.entries
        )


def rref(matrix: RationalMatrix) -> tuple[RationalMatrix, tuple[int, ...]]:
    """Return the reduced row echelon form and its pivot columns."""

    grid = [list(row) for row in matrix.entries]
    pivots: list[int] = []
    pivot_row = 0
    for col in range(matrix.cols):
        if pivot_row == len(grid):
            break
        found = next((r for r in range(pivot_row, len(grid)) if grid[r][col] != 0), None)
        if found is None:
            continue
        grid[pivot_row], grid[found] = grid[found], grid[pivot_row]
        lead = grid[pivot_row][col]
        if lead != 1:
            grid[pivot_row] = [value / lead for value in grid[pivot_row]]
        reference = grid[pivot_row]
        for r, row in enumerate(grid):
            factor = row[col]
            if r == pivot_row or factor == 0:
                continue
            grid[r] = [a - factor * b if b else a for a, b in zip(row, reference, strict=True)]
        pivots.append(col)
        pivot_row += 1
    return RationalMatrix.from_rows(grid, cols=matrix.cols), tuple(pivots)


def rank(matrix: RationalMatrix) -> int:
    """Row rank over the rationals."""

    _, pivots = rref(matrix)
    return len(pivots)


def nullspace_basis(matrix: RationalMatrix) -> list[Vector]:
    """Basis of ``{v : matrix @ v = 0}``, one vector per free column.

    Each vector is scaled so its first nonzero entry is 1, which makes the output deterministic.
    """

    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * matrix.cols
        vector[free] = Fraction(1)
        for row_index, pivot in enumerate(pivots):
            vector[pivot] = -reduced.entries[row_index][free]
        lead = next(value for value in vector if value != 0)
        basis.append(tuple(value / lead for value in vector))
    return basis
