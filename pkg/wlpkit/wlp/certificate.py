"""
Submodules with a decreasing Hilbert function.

When the kernel-quotient algorithm stops with "no WLP" at a pair
M_i -> M_{i+1} with h_i <= h_{i+1}, the obstruction it found generates a
submodule N of M with dim N_i > dim N_{i+1}:

    step 3: a vector killed by x and y gives HF (1, 0)
    step 4: Ker(×x) + Ker(×y) generates a submodule with HF (r + s, < r + s)

Obstructions found after quotient passes are lifted back to M by taking
preimages, which only adds the flat block each pass removed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

from ..exceptions import ModuleConstructionError
from ..field import FieldSpec
from ..linalg import Vector, subspace_join
from ..module import (
    EmbeddedSubmodule,
    GradedModule,
    degree_pair,
    lift_from_quotient,
    submodule_generated,
)
from .algorithm import AlgorithmStep, StepOutcome, run_algorithm
from .report import TraceKind, vectors_data

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubmoduleCertificate:
    """
    Attributes:
        degree: absolute degree d of the failing pair d -> d + 1
        index: component index of d in the module
        submodule: N inside the module
        dims: (dim N_d, dim N_{d+1}), strictly decreasing
        source: ``kernel_meet`` (step 3) or ``image_meet`` (step 4)
        cycles: quotient passes made before the obstruction appeared
        generators: vectors of M_d generating N
    """

    degree: int
    index: int
    submodule: EmbeddedSubmodule
    dims: tuple
    source: TraceKind
    cycles: int
    generators: Sequence[Vector]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "dims": list(self.dims),
            "source": self.source.value,
            "cycles": self.cycles,
            "generators": vectors_data(self.generators),
            "hilbert": str(self.submodule.hilbert_function()),
        }


def _lift(steps: Sequence[AlgorithmStep], depth: int, vector: Vector, field: FieldSpec) -> Vector:
    """Preimage in the original pair of a degree-0 vector of the depth-th quotient."""
    for step in reversed(steps[:depth]):
        vector = lift_from_quotient(step.submodule.spaces[0], vector, field)
    return vector


def _generators(steps: List[AlgorithmStep], field: FieldSpec) -> List[Vector]:
    last = steps[-1]
    depth = len(steps) - 1
    seeds: List[Vector] = []
    for k in range(depth):
        seeds.extend(_lift(steps, k, v, field) for v in steps[k].submodule.spaces[0].vectors())
    if last.trace[-1].kind is TraceKind.KERNEL_MEET:
        obstruction = last.obstruction.vectors()
    else:
        obstruction = subspace_join(last.kernel_x, last.kernel_y).vectors()
    seeds.extend(_lift(steps, depth, v, field) for v in obstruction)
    return seeds


def decreasing_submodule_certificate(m: GradedModule) -> Optional[SubmoduleCertificate]:
    """
    A submodule of m whose Hilbert function drops at the first pair
    h_i <= h_{i+1} where m fails maximal rank.

    Returns None when every such pair has maximal rank, which includes every
    module with the WLP.

    Raises:
        ModuleConstructionError: the generated submodule does not drop
    """
    for i in range(m.pair_count):
        h0, h1 = m.dims[i], m.dims[i + 1]
        if h0 == 0 or h0 > h1:
            continue
        steps = run_algorithm(degree_pair(m, i), m.degree(i))
        last = steps[-1]
        if last.outcome is not StepOutcome.NO_WLP:
            continue
        generators = _generators(steps, m.field)
        sub = submodule_generated(m, [(i, v) for v in generators])
        dims = (sub.module.dims[i], sub.module.dims[i + 1])
        if dims[0] <= dims[1]:
            raise ModuleConstructionError(
                f"degree {m.degree(i)}: obstruction generates HF {dims}, expected a drop"
            )
        logger.debug("degree %d: decreasing submodule with HF %s", m.degree(i), dims)
        return SubmoduleCertificate(
            degree=m.degree(i),
            index=i,
            submodule=sub,
            dims=dims,
            source=last.trace[-1].kind,
            cycles=len(steps) - 1,
            generators=tuple(generators),
        )
    return None
