"""
Graded modules built from ideals: submodules of S/I and cyclic quotients.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence

from ..bipoly import X, Y, BiPoly, IdealGens, format_poly
from ..exceptions import FieldMismatchError, ModuleConstructionError, NonArtinianError
from ..field import FieldSpec
from ..groebner import GroebnerBasis, buchberger, coordinates, is_artinian
from ..linalg import Matrix, Subspace, solve
from .graded import GradedModule

logger = logging.getLogger(__name__)


def artinian_basis(ideal: IdealGens) -> GroebnerBasis:
    """
    Gröbner basis of an ideal that must have finite colength.

    Raises:
        NonArtinianError: S/I is infinite-dimensional
    """
    gb = buchberger(ideal)
    if not is_artinian(gb).artinian:
        raise NonArtinianError(f"S/I is not Artinian for I = {ideal}")
    return gb


def from_quotient_submodule(
    ideal: IdealGens,
    module_gens: Sequence[BiPoly],
    field: Optional[FieldSpec] = None,
) -> GradedModule:
    """
    The submodule of S/I generated by the classes of ``module_gens``.

    Component 0 sits in the least generator degree, which becomes ``shift``.
    Its basis is the generators in order, skipping any dependent on earlier
    ones. A higher component keeps, in order, the independent products x*b
    and y*b for b in the previous basis, then new generators of that degree.

    Args:
        ideal: Homogeneous ideal with S/I Artinian
        module_gens: Homogeneous polynomials
        field: Expected coefficient field (defaults to the ideal's)

    Raises:
        NonArtinianError: S/I is infinite-dimensional
        ModuleConstructionError: a generator is not homogeneous, or all
            generators lie in I
    """
    field = field or ideal.field
    if ideal.field != field:
        raise FieldMismatchError(f"ideal over {ideal.field}, module over {field}")
    gb = artinian_basis(ideal)
    top = is_artinian(gb).top_degree

    by_degree: Dict[int, List[BiPoly]] = {}
    for g in module_gens:
        if g.field != field:
            raise FieldMismatchError(f"generator {g} is over {g.field}, expected {field}")
        if g.is_zero() or not g.is_homogeneous():
            raise ModuleConstructionError(f"module generator {g} must be nonzero and homogeneous")
        if gb.contains(g):
            logger.debug("generator %s lies in the ideal; skipped", g)
            continue
        by_degree.setdefault(g.degree, []).append(g)
    if not by_degree:
        raise ModuleConstructionError("every module generator lies in the ideal")

    low = min(by_degree)
    high = max(top - 1, low)
    bases: List[List[BiPoly]] = []
    vectors: List[List[tuple]] = []
    for d in range(low, high + 1):
        candidates: List[BiPoly] = []
        for b in bases[-1] if bases else []:
            candidates.extend((b.mul_monomial(X), b.mul_monomial(Y)))
        candidates.extend(by_degree.get(d, []))
        ambient = len(gb.standard_monomials(d))
        span = Subspace.zero(ambient, field)
        chosen: List[BiPoly] = []
        chosen_vectors: List[tuple] = []
        for c in candidates:
            v = tuple(coordinates(c, gb, d))
            grown = Subspace.span(span.vectors() + [v], ambient, field)
            if grown.dim > span.dim:
                span = grown
                chosen.append(c)
                chosen_vectors.append(v)
        bases.append(chosen)
        vectors.append(chosen_vectors)

    while len(bases) > 1 and not bases[-1]:
        bases.pop()
        vectors.pop()

    dims = tuple(len(b) for b in bases)
    mul_x: List[Matrix] = []
    mul_y: List[Matrix] = []
    for i in range(len(bases) - 1):
        d = low + i
        ambient = len(gb.standard_monomials(d + 1))
        target = Matrix.from_columns(vectors[i + 1], ambient, field)
        for maps, variable in ((mul_x, X), (mul_y, Y)):
            columns = [
                solve(target, coordinates(b.mul_monomial(variable), gb, d + 1))
                for b in bases[i]
            ]
            maps.append(Matrix.from_columns(columns, dims[i + 1], field))

    labels = tuple(format_poly(gb.normal_form(b)) for b in bases[0])
    module = GradedModule(field, low, dims, tuple(mul_x), tuple(mul_y), labels)
    logger.debug("built module with HF %s in degrees %d..%d", dims, low, low + len(dims) - 1)
    return module


def cyclic(ideal: IdealGens, field: Optional[FieldSpec] = None) -> GradedModule:
    """
    S/I as a graded module, generated by 1 in degree 0.

    Raises:
        NonArtinianError: S/I is infinite-dimensional
    """
    field = field or ideal.field
    return from_quotient_submodule(ideal, [BiPoly.constant(1, field)], field)
