"""
Shared fixtures and random generators for the wlpkit test-suite.

Random ideals are Artinian by construction: they always contain a pure power
of x and of y, or a power of the maximal ideal.
"""

import random
from pathlib import Path
from typing import List

import pytest

from wlpkit import QQ, BiPoly, IdealGens, Monomial
from wlpkit.bipoly import expand_power_ideal, monomials_of_degree
from wlpkit.cli.specfile import build_module, parse_spec
from wlpkit.exceptions import ModuleConstructionError
from wlpkit.module import GradedModule, cyclic, direct_sum, from_quotient_submodule, shift

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def monomial(a: int, b: int, coeff=1, field=QQ) -> BiPoly:
    return BiPoly.monomial(Monomial(a, b), coeff, field)


def random_form(rng: random.Random, d: int, field=QQ, terms: int = 2) -> BiPoly:
    """A nonzero homogeneous polynomial of degree d with small coefficients."""
    monos = monomials_of_degree(d)
    f = BiPoly.zero(field)
    while f.is_zero():
        for mono in rng.sample(monos, min(terms, len(monos))):
            f = f + BiPoly.monomial(mono, rng.choice([-2, -1, 1, 1, 2, 3]), field)
    return f


def random_artinian_ideal(rng: random.Random, field=QQ) -> IdealGens:
    """Pure powers (or a power of (x, y)) plus a few monomials and binomials."""
    if rng.random() < 0.3:
        gens: List[BiPoly] = list(expand_power_ideal(rng.randint(2, 6), field))
    else:
        gens = [
            monomial(rng.randint(2, 5), 0, field=field),
            monomial(0, rng.randint(2, 5), field=field),
        ]
    for _ in range(rng.randint(0, 2)):
        gens.append(random_form(rng, rng.randint(2, 5), field, terms=rng.randint(1, 2)))
    return IdealGens(tuple(gens))


def random_module(rng: random.Random, field=QQ) -> GradedModule:
    """A submodule of a random S/I generated by one to three forms."""
    while True:
        ideal = random_artinian_ideal(rng, field)
        low = rng.randint(0, 2)
        gens = [
            random_form(rng, low + rng.choice([0, 0, 1]), field, terms=rng.randint(1, 2))
            if low or rng.random() < 0.5
            else BiPoly.constant(1, field)
            for _ in range(rng.randint(1, 3))
        ]
        try:
            m = from_quotient_submodule(ideal, gens, field)
        except ModuleConstructionError:
            continue
        if not m.is_zero() and max(m.dims) <= 6:
            return m


def random_cyclic(rng: random.Random, field=QQ) -> GradedModule:
    return cyclic(random_artinian_ideal(rng, field), field)


def random_summand(rng: random.Random, field=QQ) -> GradedModule:
    return random_cyclic(rng, field) if rng.random() < 0.5 else random_module(rng, field)


def random_shifted_sum(rng: random.Random, field=QQ) -> GradedModule:
    """
    M ⊕ N(k) for random summands and k in [-2, 2].

    A summand that still grows next to one that already shrinks fails the
    WLP, so a fair share of these modules have no Lefschetz element.
    """
    while True:
        m = direct_sum([random_summand(rng, field), shift(random_summand(rng, field), rng.randint(-2, 2))])
        if not m.is_zero():
            return m


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


def load_fixture(name: str) -> GradedModule:
    """Build the module of fixtures/<name>.wlp."""
    return build_module(parse_spec((FIXTURES / f"{name}.wlp").read_text(encoding="utf-8")))
