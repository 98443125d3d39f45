"""
Cross-check middleware for degree-pair decisions.

Re-decides every pair with an independent decider (the pencil oracle in
has_wlp) and fails loudly when the verdicts differ.
"""

from __future__ import annotations

import logging
from typing import Any, Callable

from ..exceptions import MethodDisagreementError

logger = logging.getLogger(__name__)


class CrossCheckMiddleware:
    """
    Args:
        reference: decider called as reference(pair, degree) returning a report
        name: label used in messages
    """

    def __init__(self, reference: Callable[..., Any], name: str = "oracle"):
        self.reference = reference
        self.name = name

    def __call__(self, request: Any, call_next: Callable[[Any], Any]) -> Any:
        report = call_next(request)
        expected = self.reference(request.pair, request.degree)
        if expected.verdict != report.verdict:
            logger.warning(
                "degree %d: %s says %s, %s says %s",
                request.degree,
                request.method,
                report.verdict,
                self.name,
                expected.verdict,
            )
            raise MethodDisagreementError(
                f"degree {request.degree}: method {request.method!r} and {self.name} disagree "
                f"({report.verdict} vs {expected.verdict})"
            )
        return report


__all__ = ["CrossCheckMiddleware"]
