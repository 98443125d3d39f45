"""
Subspaces of K^n held in canonical reduced row-echelon form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..exceptions import FieldMismatchError, ShapeError
from ..field import QQ, FieldSpec, Scalar
from .matrix import Matrix, Vector, rref


@dataclass(frozen=True)
class Subspace:
    """
    A subspace of K^ambient_dim.

    The rows of ``basis`` are the basis vectors, in reduced row-echelon form
    with no zero rows, so two equal subspaces compare equal.
    """

    ambient_dim: int
    basis: Matrix
    pivots: Tuple[int, ...]

    @classmethod
    def span(
        cls, vectors: Sequence[Sequence[Scalar]], ambient_dim: int, field: FieldSpec = QQ
    ) -> "Subspace":
        if any(len(v) != ambient_dim for v in vectors):
            raise ShapeError(f"vectors must have length {ambient_dim}")
        reduced, r, pivots = rref(Matrix.from_rows(vectors, field, ambient_dim))
        return cls(ambient_dim, reduced.select_rows(range(r)), pivots)

    @classmethod
    def zero(cls, ambient_dim: int, field: FieldSpec = QQ) -> "Subspace":
        return cls(ambient_dim, Matrix.zeros(0, ambient_dim, field), ())

    @classmethod
    def full(cls, ambient_dim: int, field: FieldSpec = QQ) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim, field), tuple(range(ambient_dim)))

    @property
    def field(self) -> FieldSpec:
        return self.basis.field

    @property
    def dim(self) -> int:
        return self.basis.rows

    def is_zero(self) -> bool:
        return self.dim == 0

    def vectors(self) -> List[Vector]:
        return [self.basis.row(i) for i in range(self.dim)]

    def coordinates(self, vector: Sequence[Scalar]) -> Vector:
        """Coordinates of a member vector in the RREF basis."""
        return tuple(vector[p] for p in self.pivots)

    def contains(self, vector: Sequence[Scalar]) -> bool:
        if len(vector) != self.ambient_dim:
            raise ShapeError(f"vector of length {len(vector)} in K^{self.ambient_dim}")
        return Subspace.span(self.vectors() + [tuple(vector)], self.ambient_dim, self.field).dim == self.dim

    def __str__(self) -> str:
        vectors = ", ".join("(" + ", ".join(map(str, v)) + ")" for v in self.vectors())
        return f"span{{{vectors}}}"


def kernel_basis(m: Matrix) -> Subspace:
    """Canonical basis of {v : m v = 0}; its dimension is cols - rank."""
    reduced, r, pivots = rref(m)
    field = m.field
    free = [c for c in range(m.cols) if c not in pivots]
    vectors = []
    for f in free:
        v = [field.zero] * m.cols
        v[f] = field.one
        for i, p in enumerate(pivots):
            v[p] = -reduced[i, f]
        vectors.append(tuple(v))
    return Subspace.span(vectors, m.cols, field)


def _check_compatible(u: Subspace, v: Subspace) -> None:
    if u.ambient_dim != v.ambient_dim:
        raise ShapeError(f"subspaces of K^{u.ambient_dim} and K^{v.ambient_dim}")
    if u.field != v.field:
        raise FieldMismatchError(f"subspaces over {u.field} and {v.field}")


def subspace_meet(u: Subspace, v: Subspace) -> Subspace:
    """u ∩ v, from the kernel of [U^T | -V^T]."""
    _check_compatible(u, v)
    if u.is_zero() or v.is_zero():
        return Subspace.zero(u.ambient_dim, u.field)
    stacked = u.basis.T.hstack(-v.basis.T)
    relations = kernel_basis(stacked)
    vectors = [u.basis.T.apply(k[: u.dim]) for k in relations.vectors()]
    return Subspace.span(vectors, u.ambient_dim, u.field)


def subspace_join(u: Subspace, v: Subspace) -> Subspace:
    """u + v."""
    _check_compatible(u, v)
    return Subspace.span(u.vectors() + v.vectors(), u.ambient_dim, u.field)


def image(m: Matrix, u: Subspace) -> Subspace:
    """m(u) as a subspace of K^rows."""
    if u.ambient_dim != m.cols:
        raise ShapeError(f"subspace of K^{u.ambient_dim} under a {m.rows}x{m.cols} map")
    return Subspace.span([m.apply(b) for b in u.vectors()], m.rows, m.field)


def column_space(m: Matrix) -> Subspace:
    return Subspace.span(m.columns(), m.rows, m.field)
