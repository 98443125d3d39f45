"""
Finite-length graded modules over K[x, y] stored as matrix data.

Component i sits in absolute degree ``shift + i``. ``mul_x[i]`` and
``mul_y[i]`` map component i to component i + 1 and act on column
vectors, so the i-th matrix has shape (dims[i+1], dims[i]).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import Iterator, List, Optional, Sequence, Tuple

from ..exceptions import FieldMismatchError, ModuleConstructionError, PreconditionError
from ..field import QQ, FieldSpec
from ..linalg import Matrix, block_diagonal, rank


@dataclass(frozen=True)
class HilbertFunction:
    """Nonzero stretch of dim M_d, starting in absolute degree ``shift``."""

    shift: int
    values: Tuple[int, ...]

    def __post_init__(self):
        values = list(self.values)
        shift = self.shift
        while values and values[0] == 0:
            values.pop(0)
            shift += 1
        while values and values[-1] == 0:
            values.pop()
        if not values:
            shift = 0
        object.__setattr__(self, "values", tuple(values))
        object.__setattr__(self, "shift", shift)

    def at(self, degree: int) -> int:
        index = degree - self.shift
        return self.values[index] if 0 <= index < len(self.values) else 0

    def is_non_decreasing(self) -> bool:
        return all(a <= b for a, b in zip(self.values, self.values[1:]))

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.values)) + ")"


@dataclass(frozen=True)
class GradedModule:
    """
    M = M_0 + ... + M_s with multiplication maps by x and y.

    Attributes:
        field: coefficient field
        shift: absolute degree of component 0
        dims: h_0, ..., h_s
        mul_x: s matrices, ×x from component i to i + 1
        mul_y: s matrices, ×y from component i to i + 1
        labels: optional names of the component-0 basis vectors

    Raises:
        ModuleConstructionError: inconsistent shapes or x and y not commuting
    """

    field: FieldSpec
    shift: int
    dims: Tuple[int, ...]
    mul_x: Tuple[Matrix, ...]
    mul_y: Tuple[Matrix, ...]
    labels: Optional[Tuple[str, ...]] = dataclass_field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "mul_x", tuple(self.mul_x))
        object.__setattr__(self, "mul_y", tuple(self.mul_y))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
        self._validate()

    def _validate(self) -> None:
        dims = self.dims
        if any(h < 0 for h in dims):
            raise ModuleConstructionError(f"negative dimension in {dims}")
        steps = max(len(dims) - 1, 0)
        if len(self.mul_x) != steps or len(self.mul_y) != steps:
            raise ModuleConstructionError(
                f"{len(dims)} components need {steps} maps per variable, "
                f"got {len(self.mul_x)} and {len(self.mul_y)}"
            )
        for name, maps in (("x", self.mul_x), ("y", self.mul_y)):
            for i, m in enumerate(maps):
                if m.field != self.field:
                    raise FieldMismatchError(f"×{name} in degree {i} is over {m.field}")
                if m.shape != (dims[i + 1], dims[i]):
                    raise ModuleConstructionError(
                        f"×{name} in component {i}: expected shape "
                        f"{(dims[i + 1], dims[i])}, got {m.shape}"
                    )
        for i in range(steps - 1):
            if self.mul_y[i + 1] @ self.mul_x[i] != self.mul_x[i + 1] @ self.mul_y[i]:
                raise ModuleConstructionError(f"×x and ×y do not commute on component {i}")
        if self.labels is not None and (not dims or len(self.labels) != dims[0]):
            raise ModuleConstructionError("labels must name the component-0 basis")

    @classmethod
    def zero(cls, field: FieldSpec = QQ) -> "GradedModule":
        return cls(field, 0, (), (), ())

    @property
    def component_count(self) -> int:
        return len(self.dims)

    @property
    def pair_count(self) -> int:
        return max(len(self.dims) - 1, 0)

    @property
    def top_degree(self) -> Optional[int]:
        """Absolute degree of the last component; None for no components."""
        return self.shift + len(self.dims) - 1 if self.dims else None

    def degree(self, index: int) -> int:
        """Absolute degree of component ``index``."""
        return self.shift + index

    def dim_at(self, degree: int) -> int:
        index = degree - self.shift
        return self.dims[index] if 0 <= index < len(self.dims) else 0

    def is_zero(self) -> bool:
        return not any(self.dims)

    @property
    def length(self) -> int:
        return sum(self.dims)

    def multiplication(self, index: int, alpha, beta) -> Matrix:
        """×(αx + βy) from component index to index + 1."""
        return self.mul_x[index].specialize(self.mul_y[index], alpha, beta)

    def hilbert_function(self) -> HilbertFunction:
        return hilbert_function(self)

    def trimmed(self) -> "GradedModule":
        """Drop leading and trailing zero components."""
        dims = self.dims
        start = next((i for i, h in enumerate(dims) if h), len(dims))
        if start == len(dims):
            return GradedModule.zero(self.field)
        stop = max(i for i, h in enumerate(dims) if h) + 1
        if start == 0 and stop == len(dims):
            return self
        return GradedModule(
            self.field,
            self.shift + start,
            dims[start:stop],
            self.mul_x[start : stop - 1],
            self.mul_y[start : stop - 1],
            None,
        )

    def __str__(self) -> str:
        return f"GradedModule(HF={hilbert_function(self)}, shift={self.shift}, field={self.field})"


def hilbert_function(m: GradedModule) -> HilbertFunction:
    """(shift, dims) with zero components trimmed from both ends."""
    return HilbertFunction(m.shift, m.dims)


def shift(m: GradedModule, k: int) -> GradedModule:
    """Same module placed k degrees higher."""
    if k == 0:
        return m
    return GradedModule(m.field, m.shift + k, m.dims, m.mul_x, m.mul_y, m.labels)


def direct_sum(parts: Sequence[GradedModule]) -> GradedModule:
    """
    Componentwise direct sum, parts aligned by absolute degree.

    Multiplication matrices are block diagonal in the order of ``parts``;
    zero modules are ignored.

    Raises:
        FieldMismatchError: parts over different fields
        PreconditionError: no parts
    """
    if not parts:
        raise PreconditionError("direct sum of no modules")
    field = parts[0].field
    for p in parts:
        if p.field != field:
            raise FieldMismatchError(f"direct sum of modules over {field} and {p.field}")
    live = [p for p in parts if not p.is_zero()]
    if not live:
        return GradedModule.zero(field)
    if len(live) == 1:
        return live[0]
    low = min(p.shift for p in live)
    high = max(p.top_degree for p in live)
    dims = tuple(sum(p.dim_at(d) for p in live) for d in range(low, high + 1))
    mul_x: List[Matrix] = []
    mul_y: List[Matrix] = []
    for d in range(low, high):
        for maps, target in ((mul_x, "mul_x"), (mul_y, "mul_y")):
            blocks = []
            for p in live:
                index = d - p.shift
                if 0 <= index < p.pair_count:
                    blocks.append(getattr(p, target)[index])
                else:
                    blocks.append(Matrix.zeros(p.dim_at(d + 1), p.dim_at(d), field))
            maps.append(block_diagonal(blocks, field))
    labels: Optional[Tuple[str, ...]] = None
    contributing = [p for p in live if p.dim_at(low)]
    if all(p.shift == low and p.labels is not None for p in contributing):
        labels = tuple(label for p in contributing for label in p.labels)
    return GradedModule(field, low, dims, tuple(mul_x), tuple(mul_y), labels)


def dual(m: GradedModule) -> GradedModule:
    """
    Hom_K(M, K): dims reversed, maps transposed, shift -(shift + s).

    dual(dual(m)) == m.
    """
    s = m.pair_count
    dims = tuple(reversed(m.dims))
    mul_x = tuple(m.mul_x[s - 1 - j].T for j in range(s))
    mul_y = tuple(m.mul_y[s - 1 - j].T for j in range(s))
    new_shift = -(m.shift + len(m.dims) - 1) if m.dims else 0
    return GradedModule(m.field, new_shift, dims, mul_x, mul_y, None)


def degree_pair(m: GradedModule, i: int) -> GradedModule:
    """
    The two-component module M_i + M_{i+1} with shift 0.

    Raises:
        PreconditionError: i out of range
    """
    if not 0 <= i < m.pair_count:
        raise PreconditionError(f"degree pair {i} out of range for {m.component_count} components")
    labels = m.labels if i == 0 else None
    return GradedModule(
        m.field, 0, m.dims[i : i + 2], (m.mul_x[i],), (m.mul_y[i],), labels
    )


def minimal_generator_degrees(m: GradedModule) -> List[Tuple[int, int]]:
    """
    (component index, number of minimal generators) for every index with any.

    The count in index i is h_i - rank([mul_x[i-1] | mul_y[i-1]]).
    """
    result = []
    for i, h in enumerate(m.dims):
        if i == 0:
            count = h
        else:
            count = h - rank(m.mul_x[i - 1].hstack(m.mul_y[i - 1]))
        if count:
            result.append((i, count))
    return result


def generated_in_degree_zero(m: GradedModule) -> bool:
    return all(i == 0 for i, _ in minimal_generator_degrees(m))
