"""
Whole-module WLP decision.

Every consecutive degree pair is decided on its own; a pair whose dimension
drops is dualized first so deciders only ever see h_0 <= h_1.
"""

from __future__ import annotations

import logging
import os
from dataclasses import replace
from typing import List, Optional

from ..exceptions import PreconditionError
from ..middleware import CrossCheckMiddleware, MiddlewareChain
from ..module import GradedModule, degree_pair, dual, minimal_generator_degrees
from .oracle import pencil_oracle
from .report import DegreeCertificate, TraceKind, TraceStep, WlpReport
from .router import DeciderRouter, DecisionRequest, router as default_router
from .witness import find_witness

logger = logging.getLogger(__name__)

DEBUG_ENV = "WLPKIT_DEBUG"


def debug_from_env() -> bool:
    return os.environ.get(DEBUG_ENV, "").strip().lower() not in ("", "0", "false", "no")


def finite_field_caveat(m: GradedModule) -> Optional[str]:
    if not m.field.is_finite:
        return None
    return (
        f"computed over {m.field}: Lefschetz elements are only guaranteed "
        "to exist over an infinite field"
    )


def has_wlp(
    m: GradedModule,
    method: str = "auto",
    debug: Optional[bool] = None,
    router: DeciderRouter = default_router,
) -> WlpReport:
    """
    Decide whether m has the Weak Lefschetz Property.

    Args:
        m: The module
        method: "auto" (the algorithm), "algorithm", "determinant" or "oracle"
        debug: Cross-check every pair with the pencil oracle; defaults to
            the WLPKIT_DEBUG environment variable
        router: Registry the method name is resolved in

    Returns:
        The report; when the verdict is true it carries a witness verified
        in every degree

    Raises:
        UnknownMethodError: method is not registered
        DeterminantNotApplicableError: method "determinant" on a pair it
            does not cover
        MethodDisagreementError: debug cross-check failed
    """
    method_name = router.canonical(method)
    debug = debug_from_env() if debug is None else debug
    chain = MiddlewareChain()
    if debug and method_name != "oracle":
        chain.add(CrossCheckMiddleware(pencil_oracle), name="cross-check")
    decide = chain.build(router.handle)

    verdicts: List[bool] = []
    per_degree: List[DegreeCertificate] = []
    trace: List[TraceStep] = []
    pair_reports: List[WlpReport] = []
    for i in range(m.pair_count):
        degree = m.degree(i)
        h0, h1 = m.dims[i], m.dims[i + 1]
        if min(h0, h1) == 0:
            per_degree.append(DegreeCertificate(degree, i, (h0, h1), 0, 0, "trivial"))
            verdicts.append(True)
            continue
        pair = degree_pair(m, i)
        dualized = h0 > h1
        if dualized:
            pair = dual(pair)
            trace.append(
                TraceStep(
                    TraceKind.DUALIZE,
                    degree,
                    f"HF ({h0},{h1}) decreases: dualize to ({h1},{h0})",
                    {"from": [h0, h1], "to": [h1, h0]},
                )
            )
        report = decide(DecisionRequest(pair, method, degree, i))
        pair_reports.append(report)
        verdicts.append(report.verdict)
        trace.extend(report.trace)
        per_degree.extend(
            replace(c, degree=degree, index=i, dims=(h0, h1), dualized=dualized)
            for c in report.per_degree
        )
        logger.debug("degree %d: %s -> %s", degree, method_name, report.verdict)

    verdict = all(verdicts)
    caveat = finite_field_caveat(m)
    witness = find_witness(m) if verdict else None
    if verdict and witness is None:
        caveat = caveat or "no Lefschetz element among the searched candidates"
    if caveat:
        logger.warning(caveat)

    report = WlpReport(
        verdict=verdict,
        field=m.field,
        witness=witness,
        caveat=caveat,
        per_degree=per_degree,
        trace=trace,
        hilbert=m.hilbert_function(),
        generator_degrees=[(m.degree(i), c) for i, c in minimal_generator_degrees(m)],
        checks=chain.names(),
        method=method_name,
    )
    if len(pair_reports) == 1:
        report.lemma1 = pair_reports[0].lemma1
        report.polynomial = pair_reports[0].polynomial
    return report


def degree1_generator_obstruction(pair: GradedModule) -> bool:
    """
    True iff an (n, n) pair has a minimal generator in degree 1, which rules out the WLP.

    Raises:
        PreconditionError: pair is not of shape (n, n)
    """
    if pair.component_count != 2 or pair.dims[0] != pair.dims[1]:
        raise PreconditionError(f"expected HF (n, n), got {tuple(pair.dims)}")
    return any(i == 1 for i, _ in minimal_generator_degrees(pair))
