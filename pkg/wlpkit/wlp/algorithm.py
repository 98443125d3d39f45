"""
The kernel-quotient algorithm for a degree pair M_0 -> M_1 with h_0 <= h_1.

    1. Ker(×x) = 0                      -> WLP, ℓ = x
    2. Ker(×y) = 0                      -> WLP, ℓ = y
    3. Ker(×x) ∩ Ker(×y) != 0           -> no WLP
    4. y·Ker(×x) ∩ x·Ker(×y) != 0       -> no WLP
    5. otherwise replace M by M/N, N generated by Ker(×x) + Ker(×y), and repeat

Each pass through step 5 lowers both dimensions by r + s >= 2.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from typing import List, Optional

from ..exceptions import PreconditionError
from ..linalg import (
    Subspace,
    image,
    kernel_basis,
    pencil_generic_rank,
    subspace_join,
    subspace_meet,
)
from ..module import EmbeddedSubmodule, GradedModule, quotient, submodule_generated
from .lemma import require_pair
from .report import DegreeCertificate, TraceKind, TraceStep, WlpReport, Witness, vectors_data
from .witness import find_witness, mixed_candidates

logger = logging.getLogger(__name__)


class StepOutcome(str, Enum):
    WLP = "wlp"
    NO_WLP = "no_wlp"
    REDUCE = "reduce"


@dataclass
class AlgorithmStep:
    """
    One pass of steps 1-5.

    ``obstruction`` is the nonzero meet found by step 3 (inside M_0) or step 4
    (inside M_1). ``submodule`` and ``quotient`` are set when reducing.
    """

    outcome: StepOutcome
    kernel_x: Subspace
    kernel_y: Subspace
    witness: Optional[Witness] = None
    obstruction: Optional[Subspace] = None
    submodule: Optional[EmbeddedSubmodule] = None
    quotient: Optional[GradedModule] = None
    trace: List[TraceStep] = dataclass_field(default_factory=list)

    @property
    def r(self) -> int:
        return self.kernel_x.dim

    @property
    def s(self) -> int:
        return self.kernel_y.dim


def _check_shape(pair: GradedModule) -> None:
    require_pair(pair)
    if pair.dims[0] > pair.dims[1]:
        raise PreconditionError(
            f"algorithm needs h_0 <= h_1, got {tuple(pair.dims)}; dualize the pair first"
        )


def algorithm_step(pair: GradedModule, degree: int = 0) -> AlgorithmStep:
    """
    Run steps 1-5 once on a pair with h_0 <= h_1.

    Raises:
        PreconditionError: not a two-component pair, or h_0 > h_1
    """
    _check_shape(pair)
    field = pair.field
    a, b = pair.mul_x[0], pair.mul_y[0]
    kx, ky = kernel_basis(a), kernel_basis(b)
    r, s = kx.dim, ky.dim
    dims = {"r": r, "s": s, "hf": list(pair.dims)}

    if r == 0:
        step = TraceStep(TraceKind.INJ_X, degree, "(×x) injective", dims)
        return AlgorithmStep(StepOutcome.WLP, kx, ky, (field.one, field.zero), trace=[step])
    if s == 0:
        step = TraceStep(TraceKind.INJ_Y, degree, "(×y) injective", dims)
        return AlgorithmStep(StepOutcome.WLP, kx, ky, (field.zero, field.one), trace=[step])

    trace = [
        TraceStep(
            TraceKind.KERNELS,
            degree,
            f"dim Ker(×x) = {r}, dim Ker(×y) = {s}",
            dict(dims, kernel_x=vectors_data(kx.vectors()), kernel_y=vectors_data(ky.vectors())),
        )
    ]

    meet = subspace_meet(kx, ky)
    trace.append(
        TraceStep(
            TraceKind.KERNEL_MEET,
            degree,
            f"Ker(×x) ∩ Ker(×y) has dimension {meet.dim}",
            {"dim": meet.dim, "basis": vectors_data(meet.vectors())},
        )
    )
    if not meet.is_zero():
        return AlgorithmStep(StepOutcome.NO_WLP, kx, ky, obstruction=meet, trace=trace)

    y_kx, x_ky = image(b, kx), image(a, ky)
    image_meet = subspace_meet(y_kx, x_ky)
    trace.append(
        TraceStep(
            TraceKind.IMAGE_MEET,
            degree,
            f"y·Ker(×x) ∩ x·Ker(×y) has dimension {image_meet.dim}",
            {"dim": image_meet.dim, "basis": vectors_data(image_meet.vectors())},
        )
    )
    if not image_meet.is_zero():
        return AlgorithmStep(StepOutcome.NO_WLP, kx, ky, obstruction=image_meet, trace=trace)

    seeds = [(0, v) for v in subspace_join(kx, ky).vectors()]
    sub = submodule_generated(pair, seeds)
    reduced = quotient(pair, sub)
    trace.append(
        TraceStep(
            TraceKind.QUOTIENT,
            degree,
            f"pass to M/N: HF {tuple(pair.dims)} -> {tuple(reduced.dims)}",
            {"from": list(pair.dims), "to": list(reduced.dims), "dropped": r + s},
        )
    )
    return AlgorithmStep(
        StepOutcome.REDUCE, kx, ky, submodule=sub, quotient=reduced, trace=trace
    )


def run_algorithm(pair: GradedModule, degree: int = 0) -> List[AlgorithmStep]:
    """All passes until steps 1-4 settle the pair."""
    _check_shape(pair)
    steps: List[AlgorithmStep] = []
    current = pair
    while True:
        step = algorithm_step(current, degree)
        steps.append(step)
        if step.outcome is not StepOutcome.REDUCE:
            return steps
        logger.debug("degree %d: quotient %s -> %s", degree, current.dims, step.quotient.dims)
        current = step.quotient


def check_degree_pair_algorithm(pair: GradedModule, degree: int = 0) -> WlpReport:
    """
    Decide a pair with h_0 <= h_1 by the kernel-quotient algorithm.

    A pure witness x or y found after quotient passes does not lift to the
    original pair, so a mixed witness τx + y is searched for instead.

    Raises:
        PreconditionError: not a two-component pair, or h_0 > h_1
    """
    if pair.component_count < 2:
        return WlpReport(True, pair.field, witness=(pair.field.one, pair.field.zero), method="algorithm")
    steps = run_algorithm(pair, degree)
    last = steps[-1]
    verdict = last.outcome is StepOutcome.WLP
    witness = last.witness
    if verdict and len(steps) > 1:
        witness = find_witness(pair, mixed_candidates(pair))
    trace = [t for step in steps for t in step.trace]
    required = min(pair.dims)
    certificate = DegreeCertificate(
        degree=degree,
        index=0,
        dims=(pair.dims[0], pair.dims[1]),
        required=required,
        generic=required if verdict else pencil_generic_rank(pair.mul_x[0], pair.mul_y[0]),
        method="algorithm",
    )
    return WlpReport(
        verdict=verdict,
        field=pair.field,
        witness=witness,
        per_degree=[certificate],
        trace=trace,
        method="algorithm",
    )

