"""
Dense exact matrices acting on column vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from ..exceptions import FieldMismatchError, PreconditionError, ShapeError
from ..field import QQ, FieldSpec, Scalar

Vector = Tuple[Scalar, ...]


@dataclass(frozen=True)
class Matrix:
    """
    A rows x cols grid of scalars over one field.

    Attributes:
        rows: Number of rows
        cols: Number of columns
        entries: Row-major tuple of row tuples
        field: Coefficient field
    """

    rows: int
    cols: int
    entries: Tuple[Vector, ...]
    field: FieldSpec = QQ

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ShapeError(
                f"entry grid does not match declared shape {self.rows}x{self.cols}"
            )
        element = self.field.element
        object.__setattr__(
            self, "entries", tuple(tuple(element(v) for v in row) for row in self.entries)
        )

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence], field: FieldSpec = QQ, cols: Optional[int] = None
    ) -> "Matrix":
        """Build from a list of rows; cols is needed only when there are no rows."""
        rows = [tuple(r) for r in rows]
        width = len(rows[0]) if rows else (cols or 0)
        return cls(len(rows), width, tuple(rows), field)

    @classmethod
    def from_columns(
        cls, columns: Sequence[Sequence], rows: int, field: FieldSpec = QQ
    ) -> "Matrix":
        columns = [tuple(c) for c in columns]
        if any(len(c) != rows for c in columns):
            raise ShapeError(f"columns must have length {rows}")
        grid = tuple(tuple(c[i] for c in columns) for i in range(rows))
        return cls(rows, len(columns), grid, field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec = QQ) -> "Matrix":
        zero = field.zero
        return cls(rows, cols, tuple((zero,) * cols for _ in range(rows)), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec = QQ) -> "Matrix":
        zero, one = field.zero, field.one
        return cls(
            n,
            n,
            tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)),
            field,
        )

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(self.columns()), self.field)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def is_zero(self) -> bool:
        return not any(v for r in self.entries for v in r)

    def _check_field(self, other: "Matrix") -> None:
        if other.field != self.field:
            raise FieldMismatchError(
                f"cannot combine matrices over {self.field} and {other.field}"
            )

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        """self * vector for a column vector."""
        if len(vector) != self.cols:
            raise ShapeError(f"vector of length {len(vector)} for {self.rows}x{self.cols} matrix")
        zero = self.field.zero
        return tuple(
            sum((a * b for a, b in zip(r, vector) if a and b), zero) for r in self.entries
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        other_columns = other.columns()
        grid = [[self.field.zero] * other.cols for _ in range(self.rows)]
        for j, column in enumerate(other_columns):
            image = self.apply(column)
            for i in range(self.rows):
                grid[i][j] = image[i]
        return Matrix(self.rows, other.cols, tuple(map(tuple, grid)), self.field)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        grid = tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)
        )
        return Matrix(self.rows, self.cols, grid, self.field)

    def __neg__(self) -> "Matrix":
        return self.scale(-self.field.one)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = self.field.element(c)
        return Matrix(
            self.rows, self.cols, tuple(tuple(c * v for v in r) for r in self.entries), self.field
        )

    def specialize(self, other: "Matrix", tau, sigma=1) -> "Matrix":
        """tau * self + sigma * other."""
        return self.scale(tau) + other.scale(sigma)

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.rows != other.rows:
            raise ShapeError(f"cannot place {self.shape} beside {other.shape}")
        grid = tuple(r + s for r, s in zip(self.entries, other.entries))
        return Matrix(self.rows, self.cols + other.cols, grid, self.field)

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.cols:
            raise ShapeError(f"cannot place {self.shape} above {other.shape}")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries, self.field)

    def select_columns(self, indices: Iterable[int]) -> "Matrix":
        indices = list(indices)
        return Matrix.from_columns([self.column(j) for j in indices], self.rows, self.field)

    def select_rows(self, indices: Iterable[int]) -> "Matrix":
        return Matrix.from_rows([self.row(i) for i in indices], self.field, self.cols)

    def to_lists(self) -> List[List[str]]:
        return [[str(v) for v in r] for r in self.entries]

    def __str__(self) -> str:
        if not self.rows:
            return f"[] ({self.rows}x{self.cols})"
        cells = self.to_lists()
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)


class RowReduction(NamedTuple):
    rref: Matrix
    rank: int
    pivots: Tuple[int, ...]


def rref(m: Matrix) -> RowReduction:
    """Exact reduced row-echelon form, its rank and pivot columns."""
    grid = [list(r) for r in m.entries]
    pivots: List[int] = []
    top = 0
    for c in range(m.cols):
        if top == m.rows:
            break
        pivot = next((i for i in range(top, m.rows) if grid[i][c]), None)
        if pivot is None:
            continue
        grid[top], grid[pivot] = grid[pivot], grid[top]
        inv = m.field.one / grid[top][c]
        grid[top] = [v * inv for v in grid[top]]
        for i in range(m.rows):
            factor = grid[i][c]
            if i != top and factor:
                grid[i] = [a - factor * b for a, b in zip(grid[i], grid[top])]
        pivots.append(c)
        top += 1
    reduced = Matrix(m.rows, m.cols, tuple(map(tuple, grid)), m.field)
    return RowReduction(reduced, len(pivots), tuple(pivots))


def rank(m: Matrix) -> int:
    return rref(m).rank


def solve(p: Matrix, v: Sequence[Scalar]) -> Vector:
    """
    The unique c with p * c = v, for p of full column rank.

    Raises:
        PreconditionError: p lacks full column rank or v is outside its image
    """
    if len(v) != p.rows:
        raise ShapeError(f"right-hand side of length {len(v)} for {p.rows} rows")
    augmented = p.hstack(Matrix.from_columns([tuple(v)], p.rows, p.field))
    reduced, r, pivots = rref(augmented)
    if pivots != tuple(range(p.cols)):
        if p.cols in pivots:
            raise PreconditionError("vector is not in the column space")
        raise PreconditionError("matrix does not have full column rank")
    return tuple(reduced[i, p.cols] for i in range(p.cols))


def inverse(m: Matrix) -> Matrix:
    """
    Raises:
        ShapeError: m is not square
        PreconditionError: m is singular
    """
    if m.rows != m.cols:
        raise ShapeError(f"cannot invert a {m.rows}x{m.cols} matrix")
    reduced, _, pivots = rref(m.hstack(Matrix.identity(m.rows, m.field)))
    if pivots != tuple(range(m.rows)):
        raise PreconditionError("matrix is singular")
    return reduced.select_columns(range(m.cols, 2 * m.cols))


def determinant(m: Matrix) -> Scalar:
    """Gaussian elimination; the empty matrix has determinant 1."""
    if m.rows != m.cols:
        raise ShapeError(f"determinant of a {m.rows}x{m.cols} matrix")
    grid = [list(r) for r in m.entries]
    det = m.field.one
    for c in range(m.rows):
        pivot = next((i for i in range(c, m.rows) if grid[i][c]), None)
        if pivot is None:
            return m.field.zero
        if pivot != c:
            grid[c], grid[pivot] = grid[pivot], grid[c]
            det = -det
        det = det * grid[c][c]
        inv = m.field.one / grid[c][c]
        for i in range(c + 1, m.rows):
            factor = grid[i][c] * inv
            if factor:
                grid[i] = [a - factor * b for a, b in zip(grid[i], grid[c])]
    return det


def block_diagonal(blocks: Sequence[Matrix], field: FieldSpec = QQ) -> Matrix:
    """Blocks placed along the diagonal; empty blocks only contribute their shape."""
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    grid = [[field.zero] * cols for _ in range(rows)]
    r0 = c0 = 0
    for block in blocks:
        if block.field != field:
            raise FieldMismatchError(f"block over {block.field} in a matrix over {field}")
        for i in range(block.rows):
            for j in range(block.cols):
                grid[r0 + i][c0 + j] = block[i, j]
        r0 += block.rows
        c0 += block.cols
    return Matrix(rows, cols, tuple(map(tuple, grid)), field)
