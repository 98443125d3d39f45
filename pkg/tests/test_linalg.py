"""
Unit tests for exact linear algebra.

Covers:
- row reduction, rank, solve, inverse and determinant (sympy as oracle)
- subspaces: kernels, meets, joins, images
- univariate polynomials and interpolation
- pencils: det(γA + B) and generic rank, also over small prime fields
"""

import random
from fractions import Fraction

import pytest
import sympy

from wlpkit.exceptions import PreconditionError, ShapeError
from wlpkit.field import GF, QQ, FieldSpec
from wlpkit.linalg import (
    Matrix,
    Subspace,
    UniPoly,
    block_diagonal,
    column_space,
    determinant,
    image,
    interpolate,
    inverse,
    kernel_basis,
    pencil_generic_rank,
    poly_gcd,
    polydet,
    rank,
    rref,
    solve,
    specialized_ranks,
    subspace_join,
    subspace_meet,
)
from wlpkit.linalg.pencil import bareiss_determinant, pencil_grid, symbolic_rank

F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)


def random_matrix(rng: random.Random, rows: int, cols: int, field=QQ, density=0.6) -> Matrix:
    return Matrix.from_rows(
        [[rng.randint(-3, 3) if rng.random() < density else 0 for _ in range(cols)]
         for _ in range(rows)],
        field,
        cols,
    )


def to_sympy(m: Matrix) -> sympy.Matrix:
    return sympy.Matrix(m.rows, m.cols, lambda i, j: sympy.Rational(m[i, j].numerator, m[i, j].denominator))


class TestMatrix:
    """Test Matrix construction and arithmetic."""

    def test_shape_mismatch(self):
        """Test a ragged grid is rejected."""
        with pytest.raises(ShapeError):
            Matrix(2, 2, ((1, 2), (3,)))

    def test_entries_are_canonical(self):
        """Test ints become field elements."""
        m = Matrix.from_rows([[1, 2]], F3)
        assert m[0, 1] == GF(2, 3)

    def test_matmul_identity(self):
        """Test multiplication by the identity."""
        m = Matrix.from_rows([[1, 2], [3, 4], [5, 6]])
        assert Matrix.identity(3) @ m == m
        assert m @ Matrix.identity(2) == m

    def test_matmul_shape(self):
        """Test incompatible shapes."""
        with pytest.raises(ShapeError):
            Matrix.identity(2) @ Matrix.identity(3)

    def test_specialize(self):
        """Test τA + σB."""
        a = Matrix.from_rows([[1, 0], [0, 0]])
        b = Matrix.from_rows([[0, 1], [1, 0]])
        assert a.specialize(b, 2) == Matrix.from_rows([[2, 1], [1, 0]])

    def test_stack_and_select(self):
        """Test hstack, vstack and column selection."""
        a = Matrix.identity(2)
        both = a.hstack(a.scale(2))
        assert both.shape == (2, 4)
        assert both.select_columns([2, 3]) == a.scale(2)
        assert a.vstack(a).shape == (4, 2)

    def test_block_diagonal(self):
        """Test blocks land on the diagonal, empty ones keep their shape."""
        m = block_diagonal([Matrix.identity(1), Matrix.zeros(0, 1), Matrix.identity(1)])
        assert m.shape == (2, 3)
        assert m.to_lists() == [["1", "0", "0"], ["0", "0", "1"]]


class TestElimination:
    """Test rref, rank, solve, inverse and determinant."""

    def test_rref_pivots(self):
        """Test pivot columns of a rank 2 matrix."""
        result = rref(Matrix.from_rows([[0, 1, 2], [0, 2, 4], [1, 0, 0]]))
        assert result.rank == 2
        assert result.pivots == (0, 1)

    def test_rank_matches_sympy(self, rng):
        """Test rank against sympy on random matrices."""
        for _ in range(25):
            m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
            assert rank(m) == to_sympy(m).rank()

    def test_determinant_matches_sympy(self, rng):
        """Test determinant against sympy on random square matrices."""
        for _ in range(25):
            n = rng.randint(0, 5)
            m = random_matrix(rng, n, n)
            expected = to_sympy(m).det() if n else 1
            assert determinant(m) == Fraction(str(expected))

    def test_determinant_over_gf2(self):
        """Test the determinant of [[1,1],[1,0]] over GF(2)."""
        assert determinant(Matrix.from_rows([[1, 1], [1, 0]], F2)) == GF(1, 2)

    def test_inverse(self):
        """Test inverse times matrix is the identity."""
        m = Matrix.from_rows([[2, 1], [1, 1]])
        assert inverse(m) @ m == Matrix.identity(2)

    def test_inverse_singular(self):
        """Test a singular matrix cannot be inverted."""
        with pytest.raises(PreconditionError, match="singular"):
            inverse(Matrix.from_rows([[1, 2], [2, 4]]))

    def test_solve(self):
        """Test solving a full column rank system."""
        p = Matrix.from_rows([[1, 0], [1, 1], [0, 1]])
        assert solve(p, (1, 3, 2)) == (1, 2)

    def test_solve_outside_image(self):
        """Test a right-hand side outside the column space."""
        p = Matrix.from_rows([[1, 0], [1, 1], [0, 1]])
        with pytest.raises(PreconditionError, match="column space"):
            solve(p, (1, 0, 0))


class TestSubspace:
    """Test subspace operations."""

    def test_canonical_form(self):
        """Test equal spans compare equal."""
        u = Subspace.span([(1, 1, 0), (0, 1, 0)], 3)
        v = Subspace.span([(1, 0, 0), (2, 3, 0)], 3)
        assert u == v

    def test_kernel_dimension(self, rng):
        """Test dim ker = cols - rank and the kernel is annihilated."""
        for _ in range(20):
            m = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 5))
            kernel = kernel_basis(m)
            assert kernel.dim == m.cols - rank(m)
            assert all(not any(m.apply(v)) for v in kernel.vectors())

    def test_meet_join_dimensions(self, rng):
        """Test dim(U + V) + dim(U ∩ V) = dim U + dim V."""
        for _ in range(20):
            n = rng.randint(1, 5)
            u = Subspace.span([tuple(rng.randint(-2, 2) for _ in range(n))
                               for _ in range(rng.randint(0, n))], n)
            v = Subspace.span([tuple(rng.randint(-2, 2) for _ in range(n))
                               for _ in range(rng.randint(0, n))], n)
            meet, join = subspace_meet(u, v), subspace_join(u, v)
            assert join.dim + meet.dim == u.dim + v.dim
            assert all(u.contains(w) and v.contains(w) for w in meet.vectors())

    def test_meet_with_zero(self):
        """Test meeting with the zero subspace."""
        assert subspace_meet(Subspace.full(3), Subspace.zero(3)).is_zero()

    def test_mismatched_ambient(self):
        """Test subspaces of different spaces do not combine."""
        with pytest.raises(ShapeError):
            subspace_join(Subspace.full(2), Subspace.full(3))

    def test_image_and_column_space(self):
        """Test the image of the full space is the column space."""
        m = Matrix.from_rows([[1, 2], [2, 4], [0, 1]])
        assert image(m, Subspace.full(2)) == column_space(m)
        assert column_space(m).dim == 2

    def test_contains(self):
        """Test membership."""
        u = Subspace.span([(1, 1, 0)], 3)
        assert u.contains((2, 2, 0))
        assert not u.contains((1, 0, 0))


class TestUniPoly:
    """Test univariate polynomials."""

    def test_trailing_zeros_dropped(self):
        """Test the zero polynomial and degree."""
        assert UniPoly([1, 0, 0]).degree == 0
        assert UniPoly([0]).is_zero()
        assert UniPoly.zero().degree == -1

    def test_divmod(self):
        """Test (γ^2 - 1) = (γ - 1)(γ + 1)."""
        quotient, remainder = divmod(UniPoly([-1, 0, 1]), UniPoly([-1, 1]))
        assert quotient == UniPoly([1, 1])
        assert remainder.is_zero()

    def test_exact_div_failure(self):
        """Test exact_div rejects a non-divisor."""
        with pytest.raises(PreconditionError):
            UniPoly([1, 0, 1]).exact_div(UniPoly([-1, 1]))

    def test_gcd(self):
        """Test the monic gcd."""
        a = UniPoly([-1, 0, 1])
        b = UniPoly([2, -2])
        assert poly_gcd(a, b) == UniPoly([-1, 1])

    def test_interpolate(self):
        """Test interpolation recovers 2γ^2 - γ + 3."""
        target = UniPoly([3, -1, 2])
        points = [0, 1, 2]
        assert interpolate(points, [target(p) for p in points]) == target

    def test_interpolate_repeated_points(self):
        """Test repeated points are refused."""
        with pytest.raises(PreconditionError):
            interpolate([1, 1], [0, 0])

    def test_format(self):
        """Test printing with the gamma variable."""
        assert str(UniPoly([-2, 0, 1])) == "gamma^2 - 2"
        assert UniPoly([0, -1]).format("t") == "-t"
        assert str(UniPoly.zero()) == "0"


class TestPencil:
    """Test determinants and ranks of γA + B."""

    def test_polydet_small(self):
        """Test det(γI + J) for the swap matrix J is γ^2 - 1."""
        a = Matrix.identity(2)
        b = Matrix.from_rows([[0, 1], [1, 0]])
        assert polydet(a, b) == UniPoly([-1, 0, 1])

    def test_polydet_matches_sympy(self, rng):
        """Test polydet against sympy's symbolic determinant."""
        gamma = sympy.Symbol("gamma")
        for _ in range(10):
            n = rng.randint(1, 4)
            a, b = random_matrix(rng, n, n), random_matrix(rng, n, n)
            expected = sympy.Poly((gamma * to_sympy(a) + to_sympy(b)).det(), gamma)
            coefficients = [Fraction(str(c)) for c in reversed(expected.all_coeffs())]
            assert polydet(a, b) == UniPoly(coefficients)

    def test_polydet_over_gf2_uses_elimination(self):
        """Test GF(2) falls back to Bareiss elimination and still agrees."""
        a = Matrix.identity(3, F2)
        b = Matrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]], F2)
        # det(γI + P) for a 3-cycle P is γ^3 + 1
        assert polydet(a, b) == UniPoly([1, 0, 0, 1], F2)
        assert bareiss_determinant(pencil_grid(a, b), F2) == polydet(a, b)

    def test_polydet_vanishing(self):
        """Test a pencil with a common kernel has determinant zero."""
        a = Matrix.from_rows([[1, 0], [0, 0]])
        b = Matrix.from_rows([[0, 0], [1, 0]])
        assert polydet(a, b).is_zero()

    def test_polydet_requires_square(self):
        """Test polydet refuses rectangular pencils."""
        with pytest.raises(ShapeError):
            polydet(Matrix.zeros(2, 3), Matrix.zeros(2, 3))

    def test_generic_rank(self):
        """Test the generic rank exceeds every specialization over GF(2)."""
        a = Matrix.from_rows([[1, 0], [0, 1]], F2)
        b = Matrix.from_rows([[0, 1], [1, 0]], F2)
        # γ^2 + 1 = (γ + 1)^2 vanishes at γ = 1, and γ = 0 gives rank 2
        assert specialized_ranks(a, b, [0, 1]) == [2, 1]
        assert pencil_generic_rank(a, b) == 2

    def test_symbolic_rank_over_gf2(self):
        """Test symbolic rank finds a rank missed by every point of GF(2)."""
        # γ(γ + 1) vanishes on all of GF(2)
        a = Matrix.from_rows([[1, 0], [0, 1]], F2)
        b = Matrix.from_rows([[0, 0], [0, 1]], F2)
        assert max(specialized_ranks(a, b, [0, 1])) == 1
        assert symbolic_rank(pencil_grid(a, b), F2) == 2
        assert pencil_generic_rank(a, b) == 2

    def test_generic_rank_matches_sympy(self, rng):
        """Test generic rank against sympy over Q(γ)."""
        gamma = sympy.Symbol("gamma")
        for _ in range(10):
            rows, cols = rng.randint(1, 4), rng.randint(1, 4)
            a, b = random_matrix(rng, rows, cols), random_matrix(rng, rows, cols)
            expected = (gamma * to_sympy(a) + to_sympy(b)).rank(simplify=True)
            assert pencil_generic_rank(a, b) == expected
