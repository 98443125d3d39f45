"""
WLP of a direct sum read off its summands.

M = N_1 + ... + N_k has the WLP iff every N_j does and in no degree does
one summand's Hilbert function strictly increase while another's strictly
decreases.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from typing import Dict, List, Sequence

from ..exceptions import FieldMismatchError, PreconditionError
from ..module import GradedModule
from .core import has_wlp
from .report import WlpReport


class Behavior(str, Enum):
    INCREASE = "increase"
    DECREASE = "decrease"
    FLAT = "flat"
    ABSENT = "absent"


def hilbert_behavior(h_d: int, h_next: int) -> Behavior:
    """How dim M_d -> dim M_{d+1} moves; both zero is ABSENT."""
    if h_d == 0 and h_next == 0:
        return Behavior.ABSENT
    if h_next > h_d:
        return Behavior.INCREASE
    if h_next < h_d:
        return Behavior.DECREASE
    return Behavior.FLAT


@dataclass
class DirectSumAnalysis:
    """
    Attributes:
        sum_verdict: whether the direct sum has the WLP
        part_reports: has_wlp of each summand, in order
        behavior_conflicts: absolute degrees d where d -> d+1 has both an
            increasing and a decreasing summand
        behaviors: per degree d, each summand's behavior from d to d+1
    """

    sum_verdict: bool
    part_reports: List[WlpReport]
    behavior_conflicts: List[int]
    behaviors: Dict[int, List[Behavior]] = dataclass_field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "sum_verdict": self.sum_verdict,
            "part_verdicts": [r.verdict for r in self.part_reports],
            "behavior_conflicts": self.behavior_conflicts,
            "behaviors": {
                str(d): [b.value for b in behs] for d, behs in self.behaviors.items()
            },
        }


def direct_sum_wlp_analysis(
    parts: Sequence[GradedModule], method: str = "auto"
) -> DirectSumAnalysis:
    """
    Decide the WLP of the direct sum of ``parts`` from the parts alone.

    Parts are aligned by absolute degree, as in direct_sum.

    Raises:
        PreconditionError: no parts
        FieldMismatchError: parts over different fields
    """
    if not parts:
        raise PreconditionError("direct sum of no modules")
    for p in parts:
        if p.field != parts[0].field:
            raise FieldMismatchError(f"summands over {parts[0].field} and {p.field}")
    reports = [has_wlp(p, method) for p in parts]
    live = [p for p in parts if not p.is_zero()]
    behaviors: Dict[int, List[Behavior]] = {}
    conflicts: List[int] = []
    if live:
        low = min(p.shift for p in live)
        high = max(p.top_degree for p in live)
        for d in range(low, high):
            row = [hilbert_behavior(p.dim_at(d), p.dim_at(d + 1)) for p in parts]
            behaviors[d] = row
            if Behavior.INCREASE in row and Behavior.DECREASE in row:
                conflicts.append(d)
    verdict = all(r.verdict for r in reports) and not conflicts
    return DirectSumAnalysis(verdict, reports, conflicts, behaviors)
