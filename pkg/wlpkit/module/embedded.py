"""
Submodules carried together with their inclusion maps, and quotients by them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..exceptions import ModuleConstructionError, ShapeError
from ..field import Scalar
from ..linalg import Matrix, Subspace, Vector, image, subspace_join
from .graded import GradedModule, HilbertFunction

Seed = Tuple[int, Sequence[Scalar]]


@dataclass(frozen=True)
class EmbeddedSubmodule:
    """
    A graded submodule N of ``parent``.

    ``module`` has the parent's shift and component count; ``spaces[i]`` is
    N_i inside the parent's component i, and ``inclusions[i]`` has the RREF
    basis of N_i as its columns.
    """

    parent: GradedModule
    module: GradedModule
    spaces: Tuple[Subspace, ...]

    @property
    def inclusions(self) -> List[Matrix]:
        return [
            Matrix.from_columns(space.vectors(), space.ambient_dim, self.parent.field)
            for space in self.spaces
        ]

    def hilbert_function(self) -> HilbertFunction:
        return self.module.hilbert_function()

    def contains(self, index: int, vector: Sequence[Scalar]) -> bool:
        return self.spaces[index].contains(vector)

    def is_zero(self) -> bool:
        return self.module.is_zero()


def _from_spaces(parent: GradedModule, spaces: Sequence[Subspace]) -> EmbeddedSubmodule:
    mul_x, mul_y = [], []
    for i in range(parent.pair_count):
        source, target = spaces[i], spaces[i + 1]
        for maps, parent_map in ((mul_x, parent.mul_x[i]), (mul_y, parent.mul_y[i])):
            columns = [target.coordinates(parent_map.apply(v)) for v in source.vectors()]
            maps.append(Matrix.from_columns(columns, target.dim, parent.field))
    module = GradedModule(
        parent.field,
        parent.shift,
        tuple(space.dim for space in spaces),
        tuple(mul_x),
        tuple(mul_y),
    )
    return EmbeddedSubmodule(parent, module, tuple(spaces))


def submodule_generated(m: GradedModule, seeds: Sequence[Seed]) -> EmbeddedSubmodule:
    """
    Closure of the seed vectors under ×x and ×y.

    Args:
        m: The ambient module
        seeds: (component index, coordinate vector) pairs

    Raises:
        ShapeError: a seed names a missing component or has the wrong length
    """
    field = m.field
    generators: List[List[Vector]] = [[] for _ in m.dims]
    for index, vector in seeds:
        if not 0 <= index < m.component_count:
            raise ShapeError(f"seed in component {index}; module has {m.component_count}")
        if len(vector) != m.dims[index]:
            raise ShapeError(
                f"seed of length {len(vector)} in component {index} of dimension {m.dims[index]}"
            )
        generators[index].append(tuple(field.element(v) for v in vector))

    spaces: List[Subspace] = []
    for i, h in enumerate(m.dims):
        space = Subspace.span(generators[i], h, field)
        if i:
            previous = spaces[-1]
            space = subspace_join(space, image(m.mul_x[i - 1], previous))
            space = subspace_join(space, image(m.mul_y[i - 1], previous))
        spaces.append(space)
    return _from_spaces(m, spaces)


def embedded_from_spaces(m: GradedModule, spaces: Sequence[Subspace]) -> EmbeddedSubmodule:
    """
    Wrap given subspaces as a submodule.

    Raises:
        ModuleConstructionError: the subspaces are not closed under ×x and ×y
    """
    if len(spaces) != m.component_count:
        raise ShapeError(f"{len(spaces)} subspaces for {m.component_count} components")
    for i in range(m.pair_count):
        for name, maps in (("x", m.mul_x), ("y", m.mul_y)):
            for v in spaces[i].vectors():
                if not spaces[i + 1].contains(maps[i].apply(v)):
                    raise ModuleConstructionError(
                        f"subspace in component {i} is not closed under ×{name}"
                    )
    return _from_spaces(m, spaces)


def _complement_positions(space: Subspace) -> List[int]:
    return [j for j in range(space.ambient_dim) if j not in space.pivots]


def reduce_modulo(space: Subspace, vector: Sequence[Scalar]) -> Vector:
    """Coordinates of the class of ``vector`` in K^n / space, on the free positions."""
    residue = list(vector)
    for row, p in zip(space.vectors(), space.pivots):
        factor = residue[p]
        if factor:
            residue = [a - factor * b for a, b in zip(residue, row)]
    return tuple(residue[j] for j in _complement_positions(space))


def lift_from_quotient(space: Subspace, coordinates: Sequence[Scalar], field) -> Vector:
    """A preimage in K^n of a class given in quotient coordinates."""
    vector = [field.zero] * space.ambient_dim
    for j, c in zip(_complement_positions(space), coordinates):
        vector[j] = c
    return tuple(vector)


def quotient(m: GradedModule, sub: EmbeddedSubmodule) -> GradedModule:
    """
    M / N with induced multiplication maps.

    The quotient keeps the parent's shift and component count, so
    h_i(M) = h_i(N) + h_i(M/N) index by index. Component i of M/N has the
    unit vectors outside the pivots of N_i as its basis.

    Raises:
        ModuleConstructionError: sub is not closed under ×x and ×y
    """
    if sub.parent.dims != m.dims or sub.parent.shift != m.shift:
        raise ModuleConstructionError("submodule belongs to a different module")
    spaces = embedded_from_spaces(m, sub.spaces).spaces
    field = m.field
    dims = tuple(h - space.dim for h, space in zip(m.dims, spaces))
    mul_x, mul_y = [], []
    for i in range(m.pair_count):
        free = _complement_positions(spaces[i])
        for maps, parent_map in ((mul_x, m.mul_x[i]), (mul_y, m.mul_y[i])):
            columns = [
                reduce_modulo(spaces[i + 1], parent_map.column(j)) for j in free
            ]
            maps.append(Matrix.from_columns(columns, dims[i + 1], field))
    labels = tuple(f"q{j + 1}" for j in range(dims[0])) if dims else None
    return GradedModule(field, m.shift, dims, tuple(mul_x), tuple(mul_y), labels)
