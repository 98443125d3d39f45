"""
Buchberger's algorithm in K[x, y] under deglex with x > y.

Inputs are homogeneous, so every S-polynomial and remainder is homogeneous
too; a pair whose degree has no standard monomial left can only reduce to
zero and is skipped.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Sequence, Set, Tuple

from .bipoly import BiPoly, IdealGens, Monomial, monomials_of_degree
from .exceptions import FieldMismatchError, PreconditionError
from .field import FieldSpec, Scalar

logger = logging.getLogger(__name__)

DEGLEX = "deglex"


def spoly(f: BiPoly, g: BiPoly) -> BiPoly:
    """S-polynomial of monic f and g."""
    lmf, lmg = f.leading_monomial, g.leading_monomial
    lcm = lmf.lcm(lmg)
    return f.mul_monomial(lcm.quotient(lmf)) - g.mul_monomial(lcm.quotient(lmg))


def reduce(f: BiPoly, divisors: Sequence[BiPoly]) -> BiPoly:
    """Fully reduced remainder of f on division by monic divisors."""
    field = f.field
    leads = [(g.leading_monomial, g) for g in divisors]
    pending: Dict[Monomial, Scalar] = dict(f.terms)
    remainder: Dict[Monomial, Scalar] = {}
    while pending:
        mono = max(pending, key=Monomial.sort_key)
        coeff = pending.pop(mono)
        divisor = next((g for lm, g in leads if lm.divides(mono)), None)
        if divisor is None:
            remainder[mono] = coeff
            continue
        shift = mono.quotient(divisor.leading_monomial)
        for m, c in divisor.terms.items():
            m = m.times(shift)
            if m == mono:
                continue
            value = pending.get(m, field.zero) - coeff * c
            if value:
                pending[m] = value
            else:
                pending.pop(m, None)
    return BiPoly(remainder, field)


def _has_standard_monomial(leads: Sequence[Monomial], d: int) -> bool:
    return any(
        not any(lm.divides(m) for lm in leads) for m in monomials_of_degree(d)
    )


def update(
    basis: List[BiPoly], pairs: Set[Tuple[int, int]], f: BiPoly
) -> Tuple[List[BiPoly], Set[Tuple[int, int]]]:
    """Add monic f to the basis; new pairs with coprime leading monomials are dropped."""
    lmf = f.leading_monomial
    new_pairs = set()
    for i, g in enumerate(basis):
        lmg = g.leading_monomial
        if lmg.lcm(lmf) != lmg.times(lmf):
            new_pairs.add((i, len(basis)))
    return basis + [f], pairs | new_pairs


def minimalize(basis: Sequence[BiPoly]) -> List[BiPoly]:
    """Drop elements whose leading monomial is divisible by another's."""
    minimal: List[BiPoly] = []
    for f in sorted(basis, key=lambda h: h.leading_monomial.sort_key()):
        if all(not g.leading_monomial.divides(f.leading_monomial) for g in minimal):
            minimal.append(f)
    return minimal


def interreduce(basis: Sequence[BiPoly]) -> List[BiPoly]:
    """Reduced Gröbner basis from a minimal one."""
    reduced = []
    for i, g in enumerate(basis):
        others = list(basis[:i]) + list(basis[i + 1 :])
        reduced.append(reduce(g, others).monic())
    return reduced


@dataclass(frozen=True)
class GroebnerBasis:
    """
    Reduced Gröbner basis of a homogeneous ideal.

    Attributes:
        basis: monic elements sorted by leading monomial (ascending deglex)
        field: coefficient field
        order: always "deglex" (x > y)
    """

    basis: Tuple[BiPoly, ...]
    field: FieldSpec
    order: str = DEGLEX

    @property
    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial for g in self.basis]

    def normal_form(self, f: BiPoly) -> BiPoly:
        return normal_form(f, self)

    def standard_monomials(self, d: int) -> List[Monomial]:
        return standard_monomials(self, d)

    def contains(self, f: BiPoly) -> bool:
        """Ideal membership."""
        return normal_form(f, self).is_zero()

    def __len__(self) -> int:
        return len(self.basis)


def buchberger(gens: IdealGens) -> GroebnerBasis:
    """
    Reduced Gröbner basis of the ideal generated by gens.

    Pairs are processed by least lcm degree. A pair is skipped when its lcm
    degree has no standard monomial with respect to the current leading terms.
    """
    field = gens.field
    basis: List[BiPoly] = []
    pairs: Set[Tuple[int, int]] = set()
    for f in gens:
        f = reduce(f.monic(), basis) if basis else f.monic()
        if f:
            basis, pairs = update(basis, pairs, f.monic())

    skipped = 0
    while pairs:
        i, j = min(
            pairs,
            key=lambda p: (
                basis[p[0]].leading_monomial.lcm(basis[p[1]].leading_monomial).sort_key(),
                p,
            ),
        )
        pairs.remove((i, j))
        degree = basis[i].leading_monomial.lcm(basis[j].leading_monomial).degree
        if not _has_standard_monomial([g.leading_monomial for g in basis], degree):
            skipped += 1
            continue
        r = reduce(spoly(basis[i], basis[j]), basis)
        if r:
            basis, pairs = update(basis, pairs, r.monic())

    result = sorted(
        interreduce(minimalize(basis)), key=lambda g: g.leading_monomial.sort_key()
    )
    logger.debug(
        "groebner basis: %d generators -> %d elements (%d pairs skipped)",
        len(gens),
        len(result),
        skipped,
    )
    return GroebnerBasis(tuple(result), field)


def normal_form(f: BiPoly, gb: GroebnerBasis) -> BiPoly:
    """
    Remainder of f modulo gb, supported on standard monomials.

    Raises:
        FieldMismatchError: f and gb live over different fields
    """
    if f.field != gb.field:
        raise FieldMismatchError(f"polynomial over {f.field}, basis over {gb.field}")
    return reduce(f, gb.basis)


def standard_monomials(gb: GroebnerBasis, d: int) -> List[Monomial]:
    """Degree-d monomials outside the leading-term ideal, x^d first."""
    if d < 0:
        raise PreconditionError(f"degree must be nonnegative, got {d}")
    leads = gb.leading_monomials
    return [m for m in monomials_of_degree(d) if not any(lm.divides(m) for lm in leads)]


class ArtinianCheck(NamedTuple):
    artinian: bool
    top_degree: Optional[int]


def is_artinian(gb: GroebnerBasis) -> ArtinianCheck:
    """
    Whether S/I has finite length.

    top_degree is the least D with (S/I)_d = 0 for every d >= D, or None when
    the quotient is infinite.
    """
    leads = gb.leading_monomials
    x_power = min((lm.a for lm in leads if lm.b == 0), default=None)
    y_power = min((lm.b for lm in leads if lm.a == 0), default=None)
    if x_power is None or y_power is None:
        return ArtinianCheck(False, None)
    top = 0
    # every monomial of degree >= x_power + y_power - 1 is divisible by one of the pure powers
    for d in range(x_power + y_power - 1):
        if standard_monomials(gb, d):
            top = d + 1
    return ArtinianCheck(True, top)


def coordinates(f: BiPoly, gb: GroebnerBasis, d: int) -> List[Scalar]:
    """
    Coefficients of the normal form of f over standard_monomials(gb, d).

    Raises:
        PreconditionError: f is not homogeneous of degree d
    """
    if not f.is_homogeneous(d):
        raise PreconditionError(f"{f} is not homogeneous of degree {d}")
    remainder = normal_form(f, gb)
    return [remainder.coefficient(m) for m in standard_monomials(gb, d)]
