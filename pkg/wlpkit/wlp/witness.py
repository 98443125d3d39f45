"""
Lefschetz element search and verification.

Candidates are ℓ = τx + y for small nonnegative integers τ, plus ℓ = x.
"""

from __future__ import annotations

from typing import Iterable, List, Optional

from ..field import FieldSpec
from ..linalg import rank
from ..module import GradedModule
from .report import Witness


def small_points(field: FieldSpec, count: int) -> range:
    """0, 1, ..., count - 1, cut at p over GF(p)."""
    if field.is_finite:
        return range(min(count, field.size))
    return range(count)


def required_ranks(m: GradedModule) -> List[int]:
    return [min(m.dims[i], m.dims[i + 1]) for i in range(m.pair_count)]


def witness_bound(m: GradedModule) -> int:
    """1 + the total number of τ values that can fail some degree."""
    return 1 + sum(required_ranks(m))


def verify_witness(m: GradedModule, alpha, beta) -> bool:
    """Whether αx + βy has maximal rank in every degree."""
    alpha, beta = m.field.element(alpha), m.field.element(beta)
    return all(
        rank(m.multiplication(i, alpha, beta)) == required
        for i, required in enumerate(required_ranks(m))
    )


def default_candidates(m: GradedModule) -> List[Witness]:
    field = m.field
    candidates = [
        (field.element(tau), field.one) for tau in small_points(field, witness_bound(m) + 1)
    ]
    candidates.append((field.one, field.zero))
    return candidates


def find_witness(
    m: GradedModule, candidates: Optional[Iterable[Witness]] = None
) -> Optional[Witness]:
    """First candidate (default: τx + y for τ = 0..D, then x) that verifies."""
    for alpha, beta in candidates if candidates is not None else default_candidates(m):
        if verify_witness(m, alpha, beta):
            return (m.field.element(alpha), m.field.element(beta))
    return None


def mixed_candidates(m: GradedModule) -> List[Witness]:
    """τx + y with τ != 0."""
    field = m.field
    return [
        (field.element(tau), field.one)
        for tau in small_points(field, witness_bound(m) + 1)
        if tau
    ]
