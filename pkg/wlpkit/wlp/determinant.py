"""
The determinant test for pairs with Hilbert function (n, n) generated in
degree 0.

After lemma1_search picks {z_j e_j}, M_0 is reordered with x-assigned
generators first and M_1 is rebased on the chosen vectors. ×x and ×y then
carry identity blocks, and the pair has the WLP iff p(γ) = det(γA + B) is
not the zero polynomial.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..exceptions import DeterminantNotApplicableError
from ..linalg import Matrix, UniPoly, inverse, pencil_generic_rank, polydet, rank
from ..module import GradedModule, degree_pair, generated_in_degree_zero
from .lemma import assignment_matrix, lemma1_search, split_assignment
from .report import DegreeCertificate, Lemma1Result, TraceKind, TraceStep, WlpReport
from .witness import small_points

logger = logging.getLogger(__name__)


@dataclass
class DeterminantOutcome:
    """Report plus the certificate polynomial p(γ) and the matrices it came from."""

    report: WlpReport
    polynomial: UniPoly
    a: Matrix
    b: Matrix


def check_determinant_applicable(pair: GradedModule) -> None:
    """
    Raises:
        DeterminantNotApplicableError: shape other than (n, n) with n >= 1, or
            a minimal generator in degree 1
    """
    if pair.component_count != 2 or pair.dims[0] != pair.dims[1] or pair.dims[0] < 1:
        raise DeterminantNotApplicableError(
            f"determinant method needs HF (n, n) with n >= 1, got {tuple(pair.dims)}; "
            "use the algorithm method"
        )
    if not generated_in_degree_zero(pair):
        raise DeterminantNotApplicableError(
            "determinant method needs generators in degree 0 only; use the algorithm method"
        )


def block_form(pair: GradedModule, assignment: Tuple[str, ...]) -> Tuple[Matrix, Matrix]:
    """×x and ×y after reordering M_0 and rebasing M_1 on the assignment vectors."""
    order = split_assignment(assignment)
    a = pair.mul_x[0].select_columns(order)
    b = pair.mul_y[0].select_columns(order)
    p_inv = inverse(assignment_matrix(pair, assignment).select_columns(order))
    return p_inv @ a, p_inv @ b


def first_nonroot(p: UniPoly) -> Optional[int]:
    """Smallest nonnegative integer τ with p(τ) != 0, within the usable points."""
    for tau in small_points(p.field, max(p.degree, 0) + 1):
        if p.evaluate(tau):
            return tau
    return None


def determinant_method(pair: GradedModule, degree: int = 0) -> DeterminantOutcome:
    """
    Decide the WLP of an (n, n) pair generated in degree 0.

    Returns:
        The report (witness τx + y, or x / y when ×x / ×y is already
        bijective) and p(γ)

    Raises:
        DeterminantNotApplicableError: pair outside the method's scope
    """
    check_determinant_applicable(pair)
    field = pair.field
    n = pair.dims[0]
    a, b = pair.mul_x[0], pair.mul_y[0]
    trace: List[TraceStep] = []
    witness = None
    lemma: Optional[Lemma1Result] = None

    if rank(a) == n:
        witness = (field.one, field.zero)
        trace.append(TraceStep(TraceKind.INJ_X, degree, "|A| != 0: x is a Lefschetz element"))
        p = polydet(a, b)
    elif rank(b) == n:
        witness = (field.zero, field.one)
        trace.append(TraceStep(TraceKind.INJ_Y, degree, "|B| != 0: y is a Lefschetz element"))
        p = polydet(a, b)
    else:
        lemma = lemma1_search(pair)
        trace.append(
            TraceStep(
                TraceKind.LEMMA1,
                degree,
                f"independent set z_j e_j: {lemma}",
                lemma.to_dict(),
            )
        )
        if lemma.found:
            a, b = block_form(pair, lemma.assignment)
            p = polydet(a, b)
            trace.append(
                TraceStep(
                    TraceKind.DETERMINANT,
                    degree,
                    f"p(gamma) = {p}",
                    {"A": a.to_lists(), "B": b.to_lists(), "p": str(p), "assignment": True},
                )
            )
        else:
            # no independent set: every γA + B is singular
            p = UniPoly.zero(field)
            trace.append(
                TraceStep(
                    TraceKind.DETERMINANT,
                    degree,
                    "no independent assignment: p(gamma) = 0",
                    {"A": a.to_lists(), "B": b.to_lists(), "p": str(p), "assignment": False},
                )
            )
        if p:
            tau = first_nonroot(p)
            if tau is not None:
                witness = (field.element(tau), field.one)

    verdict = bool(p)
    logger.debug("determinant method in degree %d: p = %s, verdict %s", degree, p, verdict)
    certificate = DegreeCertificate(
        degree=degree,
        index=0,
        dims=(n, n),
        required=n,
        generic=n if p else pencil_generic_rank(a, b),
        method="determinant",
    )
    report = WlpReport(
        verdict=verdict,
        field=field,
        witness=witness,
        per_degree=[certificate],
        trace=trace,
        method="determinant",
        lemma1=lemma,
        polynomial=p,
    )
    return DeterminantOutcome(report, p, a, b)


@dataclass
class GammaEntry:
    """Determinant data for one degree pair, or the reason it does not apply."""

    degree: int
    applicable: bool
    reason: Optional[str] = None
    outcome: Optional[DeterminantOutcome] = None


def gamma_survey(m: GradedModule) -> List[GammaEntry]:
    """determinant_method on every square degree pair generated in degree 0."""
    entries = []
    for i in range(m.pair_count):
        pair = degree_pair(m, i)
        try:
            check_determinant_applicable(pair)
        except DeterminantNotApplicableError as exc:
            entries.append(GammaEntry(m.degree(i), False, str(exc)))
            continue
        entries.append(GammaEntry(m.degree(i), True, outcome=determinant_method(pair, m.degree(i))))
    return entries
