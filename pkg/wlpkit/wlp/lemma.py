"""
Search for an independent set {z_1 e_1, ..., z_n e_n} in M_1, z_i in {x, y}.

For a pair with h_0 <= h_1 that is generated in degree 0, failure of the
search rules out the WLP.
"""

from __future__ import annotations

from itertools import product
from typing import List, Sequence

from ..exceptions import PreconditionError
from ..linalg import Matrix, rank
from ..module import GradedModule, generated_in_degree_zero
from .report import Lemma1Result


def require_pair(pair: GradedModule) -> None:
    if pair.component_count != 2:
        raise PreconditionError(
            f"expected a two-component module, got {pair.component_count} components"
        )


def assignment_matrix(pair: GradedModule, assignment: Sequence[str]) -> Matrix:
    """Columns z_j e_j in M_1 coordinates."""
    mul = {"x": pair.mul_x[0], "y": pair.mul_y[0]}
    columns = [mul[z].column(j) for j, z in enumerate(assignment)]
    return Matrix.from_columns(columns, pair.dims[1], pair.field)


def lemma1_search(pair: GradedModule) -> Lemma1Result:
    """
    First assignment, lexicographic with x < y, whose vectors are independent.

    Raises:
        PreconditionError: pair is not two components generated in degree 0
    """
    require_pair(pair)
    if not generated_in_degree_zero(pair):
        raise PreconditionError("pair has a minimal generator in degree 1")
    n = pair.dims[0]
    if n > pair.dims[1]:
        return Lemma1Result(False)
    for assignment in product("xy", repeat=n):
        if rank(assignment_matrix(pair, assignment)) == n:
            return Lemma1Result(True, tuple(assignment))
    return Lemma1Result(False)


def split_assignment(assignment: Sequence[str]) -> List[int]:
    """Generator order with x-assigned generators first, each group in original order."""
    return [j for j, z in enumerate(assignment) if z == "x"] + [
        j for j, z in enumerate(assignment) if z == "y"
    ]
