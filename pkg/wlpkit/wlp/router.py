"""
Registry of degree-pair deciders.

Deciders register under a method name with a decorator, in the way routes
register on an application, and are looked up by name for every pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List

from ..exceptions import UnknownMethodError
from ..module import GradedModule
from .algorithm import check_degree_pair_algorithm
from .determinant import determinant_method
from .oracle import pencil_oracle
from .report import WlpReport

Decider = Callable[[GradedModule, int], WlpReport]


@dataclass(frozen=True)
class DecisionRequest:
    """One degree pair on its way through the decision chain."""

    pair: GradedModule
    method: str
    degree: int
    index: int = 0


class DeciderRouter:
    """
    Maps method names to deciders.

    Aliases point one name at another (``auto`` resolves to ``algorithm``).
    """

    def __init__(self):
        self.deciders: Dict[str, Decider] = {}
        self.aliases: Dict[str, str] = {}

    def add_decider(self, name: str, decider: Decider) -> None:
        if name in self.deciders or name in self.aliases:
            raise ValueError(f"decider {name!r} already registered")
        self.deciders[name] = decider

    def decider(self, name: str) -> Callable[[Decider], Decider]:
        """
        Decorator registering a decider.

        Example:
            @router.decider("oracle")
            def oracle(pair, degree):
                ...
        """

        def decorator(func: Decider) -> Decider:
            self.add_decider(name, func)
            return func

        return decorator

    def alias(self, name: str, target: str) -> None:
        if target not in self.deciders:
            raise ValueError(f"alias {name!r} targets unknown decider {target!r}")
        self.aliases[name] = target

    @property
    def methods(self) -> List[str]:
        return list(self.aliases) + list(self.deciders)

    def canonical(self, name: str) -> str:
        """
        Raises:
            UnknownMethodError: no decider or alias with this name
        """
        name = self.aliases.get(name, name)
        if name not in self.deciders:
            raise UnknownMethodError(
                f"unknown method {name!r}; choose from {', '.join(self.methods)}"
            )
        return name

    def resolve(self, name: str) -> Decider:
        return self.deciders[self.canonical(name)]

    def handle(self, request: DecisionRequest) -> WlpReport:
        return self.resolve(request.method)(request.pair, request.degree)


router = DeciderRouter()


@router.decider("algorithm")
def algorithm_decider(pair: GradedModule, degree: int) -> WlpReport:
    return check_degree_pair_algorithm(pair, degree)


@router.decider("determinant")
def determinant_decider(pair: GradedModule, degree: int) -> WlpReport:
    return determinant_method(pair, degree).report


@router.decider("oracle")
def oracle_decider(pair: GradedModule, degree: int) -> WlpReport:
    return pencil_oracle(pair, degree)


router.alias("auto", "algorithm")
