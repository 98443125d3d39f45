"""
Middleware for wlpkit.
"""

from .chain import MiddlewareCallable, MiddlewareChain
from .crosscheck import CrossCheckMiddleware
from .exception import ExceptionMiddleware

__all__ = [
    "MiddlewareCallable",
    "MiddlewareChain",
    "CrossCheckMiddleware",
    "ExceptionMiddleware",
]
