"""
Result objects produced by the deciders.

Everything here is plain data with a ``to_dict`` for the JSON renderer.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from ..bipoly import BiPoly, format_poly
from ..field import FieldSpec, Scalar
from ..linalg import UniPoly
from ..module import HilbertFunction

Witness = Tuple[Scalar, Scalar]


class TraceKind(str, Enum):
    INJ_X = "inj_x"
    INJ_Y = "inj_y"
    KERNELS = "kernels"
    KERNEL_MEET = "kernel_meet"
    IMAGE_MEET = "image_meet"
    QUOTIENT = "quotient"
    DUALIZE = "dualize"
    DETERMINANT = "determinant"
    LEMMA1 = "lemma1"
    ORACLE = "oracle"


@dataclass(frozen=True)
class TraceStep:
    """
    One recorded step of a decider.

    Attributes:
        kind: which test ran
        degree: absolute degree of the source component, when known
        message: one-line human description
        data: kernel dimensions, bases, matrices or p(γ), all as JSON-ready values
    """

    kind: TraceKind
    degree: Optional[int]
    message: str
    data: Dict[str, Any] = dataclass_field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "degree": self.degree,
            "message": self.message,
            "data": self.data,
        }


@dataclass(frozen=True)
class Lemma1Result:
    """found, and the variable multiplying each degree-0 generator."""

    found: bool
    assignment: Tuple[str, ...] = ()

    def __str__(self) -> str:
        if not self.found:
            return "none"
        return "(" + ",".join(self.assignment) + ")"

    def to_dict(self) -> Dict[str, Any]:
        return {"found": self.found, "assignment": list(self.assignment)}


@dataclass(frozen=True)
class DegreeCertificate:
    """Outcome for ×ℓ : M_d -> M_{d+1}."""

    degree: int
    index: int
    dims: Tuple[int, int]
    required: int
    generic: int
    method: str
    dualized: bool = False

    @property
    def passed(self) -> bool:
        return self.generic == self.required

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "index": self.index,
            "dims": list(self.dims),
            "required": self.required,
            "generic": self.generic,
            "method": self.method,
            "dualized": self.dualized,
            "passed": self.passed,
        }


def format_witness(witness: Optional[Witness], field: FieldSpec) -> Optional[str]:
    if witness is None:
        return None
    return format_poly(BiPoly.linear_form(witness[0], witness[1], field))


@dataclass
class WlpReport:
    """
    Verdict on the Weak Lefschetz Property with its supporting evidence.

    ``witness`` is (α, β) for ℓ = αx + βy. ``generator_degrees`` lists
    (absolute degree, count) of minimal generators.
    """

    verdict: bool
    field: FieldSpec
    witness: Optional[Witness] = None
    caveat: Optional[str] = None
    per_degree: List[DegreeCertificate] = dataclass_field(default_factory=list)
    trace: List[TraceStep] = dataclass_field(default_factory=list)
    hilbert: Optional[HilbertFunction] = None
    generator_degrees: List[Tuple[int, int]] = dataclass_field(default_factory=list)
    method: str = "auto"
    lemma1: Optional[Lemma1Result] = None
    polynomial: Optional[UniPoly] = None
    checks: List[str] = dataclass_field(default_factory=list)

    @property
    def failing_degrees(self) -> List[Tuple[int, int]]:
        return [(c.degree, c.degree + 1) for c in self.per_degree if not c.passed]

    @property
    def witness_text(self) -> Optional[str]:
        return format_witness(self.witness, self.field)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict,
            "field": str(self.field),
            "method": self.method,
            "hilbert_function": {
                "shift": self.hilbert.shift,
                "values": list(self.hilbert.values),
            }
            if self.hilbert is not None
            else None,
            "witness": {
                "alpha": str(self.witness[0]),
                "beta": str(self.witness[1]),
                "form": self.witness_text,
            }
            if self.witness is not None
            else None,
            "caveat": self.caveat,
            "failing_degrees": [list(p) for p in self.failing_degrees],
            "generator_degrees": [list(g) for g in self.generator_degrees],
            "per_degree": [c.to_dict() for c in self.per_degree],
            "lemma1": self.lemma1.to_dict() if self.lemma1 is not None else None,
            "polynomial": str(self.polynomial) if self.polynomial is not None else None,
            "checks": list(self.checks),
            "trace": [t.to_dict() for t in self.trace],
        }


def vectors_data(vectors) -> List[List[str]]:
    return [[str(v) for v in vector] for vector in vectors]
