"""
The wlpkit command application.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Dict, List, Optional

from ..exceptions import PreconditionError
from ..middleware import ExceptionMiddleware, MiddlewareCallable, MiddlewareChain
from ..response import CommandResult
from ..wlp import debug_from_env, router

CommandHandler = Callable[["Invocation"], CommandResult]


@dataclass(frozen=True)
class Invocation:
    """
    One command as requested on the command line.

    ``method`` and ``jobs`` are filled from the application defaults when
    left as None.
    """

    command: str
    paths: List[str] = field(default_factory=list)
    method: Optional[str] = None
    json: bool = False
    witness: bool = False
    trace: bool = False
    form: Optional[str] = None
    jobs: Optional[int] = None
    debug: bool = False


class WlpApp:
    """Main wlpkit application class. Commands register on an instance."""

    def __init__(
        self,
        default_method: str = "auto",
        debug: Optional[bool] = None,
        max_workers: Optional[int] = None,
    ):
        """Initialize the application.

        Args:
            default_method: Decider used when a command does not name one
            debug: Cross-check every degree pair with the pencil oracle and
                add tracebacks to errors; defaults to WLPKIT_DEBUG
            max_workers: Thread pool size for batch commands (None lets the
                executor decide)
        """
        router.canonical(default_method)
        self.default_method = default_method
        self.debug = debug_from_env() if debug is None else debug
        self.max_workers = max_workers
        self.commands: Dict[str, CommandHandler] = {}
        self.descriptions: Dict[str, str] = {}
        self.middleware_chain = MiddlewareChain()
        self._handler: Optional[Callable[[Invocation], CommandResult]] = None

    def add_command(self, name: str, handler: CommandHandler, description: str = "") -> None:
        """
        Register a command handler.

        Raises:
            ValueError: name already registered
        """
        if name in self.commands:
            raise ValueError(f"command {name!r} already registered")
        self.commands[name] = handler
        self.descriptions[name] = description or (handler.__doc__ or "").strip().splitlines()[0]

    def command(self, name: str, description: str = ""):
        """
        Decorator for registering commands.

        Usage:
            @app.command("check")
            def check(invocation):
                return text_result("...")
        """

        def decorator(func: CommandHandler) -> CommandHandler:
            self.add_command(name, func, description)
            return func

        return decorator

    def add_middleware(self, middleware: MiddlewareCallable, name: Optional[str] = None) -> None:
        """
        Raises:
            RuntimeError: the chain was already built by a first handle()
        """
        if self._handler is not None:
            raise RuntimeError("cannot add middleware after the first command has run")
        self.middleware_chain.add(middleware, name)

    def _dispatch(self, invocation: Invocation) -> CommandResult:
        handler = self.commands.get(invocation.command)
        if handler is None:
            raise PreconditionError(
                f"unknown command {invocation.command!r}; choose from {', '.join(self.commands)}"
            )
        return handler(invocation)

    def _build(self) -> Callable[[Invocation], CommandResult]:
        chain = MiddlewareChain()
        chain.add(ExceptionMiddleware("debug" if self.debug else "production"), name="errors")
        inner = self.middleware_chain.build(self._dispatch)
        return chain.build(inner)

    def resolve(self, invocation: Invocation) -> Invocation:
        """Fill unset options from the application configuration."""
        return replace(
            invocation,
            method=invocation.method or self.default_method,
            jobs=invocation.jobs or self.max_workers,
            debug=invocation.debug or self.debug,
        )

    def handle(self, invocation: Invocation) -> CommandResult:
        """Run one command; every failure comes back as an exit status 2 result."""
        if self._handler is None:
            self._handler = self._build()
        return self._handler(self.resolve(invocation))
