"""
Matrix pencils γa + b: determinants in K[γ] and ranks over K(γ).

Both operations evaluate at the small integers 0, 1, ..., n when the field
has enough distinct elements, and otherwise eliminate symbolically with
UniPoly entries.
"""

from __future__ import annotations

import logging
from typing import List, Sequence

from ..exceptions import FieldMismatchError, ShapeError
from ..field import FieldSpec
from .matrix import Matrix, determinant, rank
from .unipoly import UniPoly, interpolate, poly_gcd

logger = logging.getLogger(__name__)

PolyGrid = List[List[UniPoly]]


def _has_points(field: FieldSpec, count: int) -> bool:
    return not field.is_finite or field.size >= count


def _check_pencil(a: Matrix, b: Matrix) -> None:
    if a.field != b.field:
        raise FieldMismatchError(f"pencil over {a.field} and {b.field}")
    if a.shape != b.shape:
        raise ShapeError(f"pencil of shapes {a.shape} and {b.shape}")


def pencil_grid(a: Matrix, b: Matrix) -> PolyGrid:
    """Entries of γa + b as UniPoly values."""
    return [
        [UniPoly.linear(a[i, j], b[i, j], a.field) for j in range(a.cols)]
        for i in range(a.rows)
    ]


def bareiss_determinant(grid: PolyGrid, field: FieldSpec) -> UniPoly:
    """Fraction-free determinant of a square polynomial matrix."""
    n = len(grid)
    if n == 0:
        return UniPoly.constant(1, field)
    m = [list(r) for r in grid]
    sign = 1
    previous = UniPoly.constant(1, field)
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return UniPoly.zero(field)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(previous)
        previous = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def symbolic_rank(grid: PolyGrid, field: FieldSpec) -> int:
    """Rank over K(γ) by cross-multiplying elimination with content removal."""
    rows = [list(r) for r in grid if any(r)]
    if not rows:
        return 0
    cols = len(rows[0])
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        head = rows[r][c]
        for i in range(r + 1, len(rows)):
            factor = rows[i][c]
            if not factor:
                continue
            row = [x * head - factor * y for x, y in zip(rows[i], rows[r])]
            content = UniPoly.zero(field)
            for entry in row:
                if entry:
                    content = poly_gcd(content, entry)
            if content and content.degree > 0:
                row = [entry.exact_div(content) for entry in row]
            rows[i] = row
        r += 1
        if r == len(rows):
            break
    return r


def polydet(a: Matrix, b: Matrix) -> UniPoly:
    """
    det(γa + b) as a polynomial of degree at most n.

    Interpolates det(τa + b) at τ = 0..n when the field has more than n
    elements, otherwise runs Bareiss elimination over K[γ].

    Raises:
        ShapeError: a, b are not square of the same shape
    """
    _check_pencil(a, b)
    if a.rows != a.cols:
        raise ShapeError(f"polydet needs square matrices, got {a.rows}x{a.cols}")
    n = a.rows
    field = a.field
    if _has_points(field, n + 1):
        points = list(range(n + 1))
        values = [determinant(a.specialize(b, tau)) for tau in points]
        return interpolate(points, values, field)
    logger.debug("polydet: %s too small for %d points, eliminating symbolically", field, n + 1)
    return bareiss_determinant(pencil_grid(a, b), field)


def pencil_generic_rank(a: Matrix, b: Matrix) -> int:
    """
    Rank of γa + b over K(γ).

    A nonzero r x r minor is a polynomial of degree at most r, so it survives
    at one of max(rows, cols) + 1 distinct points.
    """
    _check_pencil(a, b)
    count = max(a.rows, a.cols) + 1
    if _has_points(a.field, count):
        return max(rank(a.specialize(b, tau)) for tau in range(count))
    logger.debug("pencil rank: %s too small for %d points, eliminating symbolically", a.field, count)
    return symbolic_rank(pencil_grid(a, b), a.field)


def specialized_ranks(a: Matrix, b: Matrix, points: Sequence[int]) -> List[int]:
    """rank(τa + b) for each τ."""
    _check_pencil(a, b)
    return [rank(a.specialize(b, tau)) for tau in points]
