"""
Middleware chain implementation for wlpkit.

The MiddlewareChain class wraps a handler with named (request, call_next)
layers. It is used twice: around every CLI command, and around every
degree-pair decision inside has_wlp, where the layer names end up in the
report as the checks every pair went through.
"""

import logging
from typing import Any, Callable, List, Optional, Protocol, Tuple

logger = logging.getLogger(__name__)


class MiddlewareCallable(Protocol):
    """Protocol for middleware callables in wlpkit."""

    def __call__(self, request: Any, call_next: Callable[[Any], Any]) -> Any:
        """
        Process a request through the middleware.

        Args:
            request: A command invocation or a degree-pair decision request
            call_next: Function to call the next middleware in the chain

        Returns:
            Whatever the wrapped handler returns
        """
        ...


def layer_name(middleware: MiddlewareCallable) -> str:
    """Explicit ``name`` attribute, else the function or class name."""
    name = getattr(middleware, "name", None)
    if isinstance(name, str) and name:
        return name
    return getattr(middleware, "__name__", None) or type(middleware).__name__


def describe(request: Any) -> str:
    """Short label of a request for log lines."""
    command = getattr(request, "command", None)
    if command is not None:
        return f"command {command}"
    degree = getattr(request, "degree", None)
    if degree is not None:
        return f"degree {degree} via {getattr(request, 'method', '?')}"
    return type(request).__name__


class MiddlewareChain:
    """
    Manages a chain of named middleware.

    The chain follows the "onion" pattern: middleware run in registration
    order, each wrapping the next one. Names are unique within a chain.
    """

    def __init__(self):
        self._layers: List[Tuple[str, MiddlewareCallable]] = []

    def add(self, middleware: MiddlewareCallable, name: Optional[str] = None) -> None:
        """
        Add middleware to the chain.

        Args:
            middleware: A callable with signature (request, call_next) -> result
            name: Layer name; defaults to layer_name(middleware), suffixed
                with a counter when that name is already taken

        Raises:
            ValueError: an explicit name is already in the chain
        """
        if name is None:
            base = layer_name(middleware)
            name, n = base, 2
            while name in self:
                name, n = f"{base}#{n}", n + 1
        elif name in self:
            raise ValueError(f"middleware {name!r} already in the chain")
        self._layers.append((name, middleware))

    def remove(self, name: str) -> None:
        """
        Raises:
            KeyError: no layer of that name
        """
        for i, (layer, _) in enumerate(self._layers):
            if layer == name:
                del self._layers[i]
                return
        raise KeyError(name)

    def names(self) -> List[str]:
        """Layer names, outermost first."""
        return [name for name, _ in self._layers]

    def __contains__(self, name: object) -> bool:
        return any(layer == name for layer, _ in self._layers)

    def build(self, endpoint: Callable[[Any], Any]) -> Callable[[Any], Any]:
        """
        Build the middleware chain around the given endpoint.

        Later add() or remove() calls do not change a built handler.

        Args:
            endpoint: The final handler

        Returns:
            A callable that represents the complete chain

        Example:
            If middleware are registered as [A, B, C], the execution flow will be:
            request -> A -> B -> C -> endpoint -> C -> B -> A -> result
        """
        if not self._layers:
            return endpoint

        current_handler = endpoint
        for name, middleware in reversed(self._layers):

            def middleware_handler(request, mw=middleware, next_app=current_handler, layer=name):
                logger.debug("%s: entering %s", describe(request), layer)
                return mw(request, next_app)

            current_handler = middleware_handler
        return current_handler

    def count(self) -> int:
        """Return the number of middleware in the chain."""
        return len(self._layers)

    def clear(self) -> None:
        """Remove all middleware from the chain."""
        self._layers.clear()
