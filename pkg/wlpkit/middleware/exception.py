"""
Exception handling middleware for wlpkit commands.

Captures errors raised by downstream middleware or command handlers and turns
them into a CommandResult with exit status 2 and a one-line message on stderr.

Mode-controlled output:
    mode="production":  error: <message>
    mode="debug":       error: <message> followed by the traceback
"""

from __future__ import annotations

import logging
import traceback
from typing import Any, Callable, Literal

from ..exceptions import WlpError
from ..response import CommandResult, error_result

logger = logging.getLogger(__name__)


class ExceptionMiddleware:
    """
    Middleware that converts library and OS errors to error results.

    Exceptions outside WlpError and OSError are programming errors; they are
    reported the same way but logged with their traceback.

    Args:
        mode: "production" (default) for the message only, "debug" to add the traceback
    """

    def __init__(self, mode: Literal["production", "debug"] = "production"):
        self.mode = mode.lower()

    def __call__(
        self, request: Any, call_next: Callable[[Any], CommandResult]
    ) -> CommandResult:
        try:
            return call_next(request)
        except Exception as exc:  # noqa: BLE001 - every failure becomes exit status 2
            if not isinstance(exc, (WlpError, OSError)):
                logger.exception("unexpected failure")
            message = str(exc) or type(exc).__name__
            if isinstance(exc, OSError) and exc.filename:
                message = f"{exc.filename}: {exc.strerror or message}"
            detail = None
            if self.mode == "debug":
                detail = "".join(traceback.format_exception(type(exc), exc, exc.__traceback__))
            return error_result(message, detail)


__all__ = ["ExceptionMiddleware"]
