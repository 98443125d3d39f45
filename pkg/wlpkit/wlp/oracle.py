"""
Independent check: the rank of the pencil γ·(×x) + (×y) over K(γ).
"""

from __future__ import annotations

from ..linalg import pencil_generic_rank, rank
from ..module import GradedModule
from .lemma import require_pair
from .report import DegreeCertificate, TraceKind, TraceStep, WlpReport
from .witness import find_witness, small_points


def pencil_oracle(pair: GradedModule, degree: int = 0) -> WlpReport:
    """
    A pair has the WLP iff the pencil reaches rank min(h_0, h_1).

    The point (1:0) of the pencil, ×x itself, is compared separately.
    """
    require_pair(pair)
    field = pair.field
    a, b = pair.mul_x[0], pair.mul_y[0]
    required = min(pair.dims)
    generic = pencil_generic_rank(a, b)
    rank_x, rank_y = rank(a), rank(b)
    best = max(generic, rank_x)
    verdict = best == required
    witness = None
    if verdict:
        candidates = [(field.element(t), field.one) for t in small_points(field, max(pair.dims) + 2)]
        candidates.append((field.one, field.zero))
        witness = find_witness(pair, candidates)
    step = TraceStep(
        TraceKind.ORACLE,
        degree,
        f"pencil rank {best}, required {required}",
        {"generic": generic, "rank_x": rank_x, "rank_y": rank_y, "required": required},
    )
    certificate = DegreeCertificate(
        degree=degree,
        index=0,
        dims=(pair.dims[0], pair.dims[1]),
        required=required,
        generic=best,
        method="oracle",
    )
    return WlpReport(
        verdict=verdict,
        field=field,
        witness=witness,
        per_degree=[certificate],
        trace=[step],
        method="oracle",
    )
