from .matrix import (
    Matrix,
    RowReduction,
    Vector,
    block_diagonal,
    determinant,
    inverse,
    rank,
    rref,
    solve,
)
from .pencil import (
    bareiss_determinant,
    pencil_generic_rank,
    pencil_grid,
    polydet,
    specialized_ranks,
    symbolic_rank,
)
from .subspace import (
    Subspace,
    column_space,
    image,
    kernel_basis,
    subspace_join,
    subspace_meet,
)
from .unipoly import UniPoly, interpolate, poly_gcd

__all__ = [
    "Matrix",
    "RowReduction",
    "block_diagonal",
    "Vector",
    "determinant",
    "inverse",
    "rank",
    "rref",
    "solve",
    "bareiss_determinant",
    "pencil_generic_rank",
    "pencil_grid",
    "polydet",
    "specialized_ranks",
    "symbolic_rank",
    "Subspace",
    "column_space",
    "image",
    "kernel_basis",
    "subspace_join",
    "subspace_meet",
    "UniPoly",
    "interpolate",
    "poly_gcd",
]
