"""
Exact scalar arithmetic over the rationals and over prime fields.

Rationals are plain ``fractions.Fraction`` values. Residues modulo a prime p
are ``GF`` values. Both are immutable, so scalars can be shared freely.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Optional, Union

from .exceptions import FieldMismatchError, ParseError, ScalarDivisionError


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (moduli here are small)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class GF:
    """
    An element of the prime field GF(p), stored as a residue in [0, p).

    Operands from another prime field, or rationals, raise FieldMismatchError.
    Plain ints are accepted and reduced modulo p.
    """

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        object.__setattr__(self, "p", int(p))
        object.__setattr__(self, "value", int(value) % self.p)

    def __setattr__(self, name, value):
        raise AttributeError("GF values are immutable")

    def _residue(self, other) -> int:
        if isinstance(other, GF):
            if other.p != self.p:
                raise FieldMismatchError(
                    f"cannot combine GF({self.p}) with GF({other.p})"
                )
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other % self.p
        raise FieldMismatchError(
            f"cannot combine GF({self.p}) with {type(other).__name__}"
        )

    def __add__(self, other) -> "GF":
        return GF(self.value + self._residue(other), self.p)

    __radd__ = __add__

    def __sub__(self, other) -> "GF":
        return GF(self.value - self._residue(other), self.p)

    def __rsub__(self, other) -> "GF":
        return GF(self._residue(other) - self.value, self.p)

    def __mul__(self, other) -> "GF":
        return GF(self.value * self._residue(other), self.p)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GF":
        divisor = self._residue(other)
        if divisor == 0:
            raise ScalarDivisionError(f"division by zero in GF({self.p})")
        return GF(self.value * pow(divisor, -1, self.p), self.p)

    def __rtruediv__(self, other) -> "GF":
        return GF(self._residue(other), self.p) / self

    def __neg__(self) -> "GF":
        return GF(-self.value, self.p)

    def __pos__(self) -> "GF":
        return self

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, GF):
            return self.p == other.p and self.value == other.value
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("GF", self.p, self.value))

    def inverse(self) -> "GF":
        """Multiplicative inverse."""
        return GF(1, self.p) / self

    def __repr__(self) -> str:
        return f"GF({self.value} mod {self.p})"

    def __str__(self) -> str:
        return str(self.value)


Scalar = Union[Fraction, GF]


class FieldKind(str, Enum):
    """The two supported coefficient fields."""

    RATIONALS = "rationals"
    PRIME_FIELD = "prime-field"


_FIELD_TEXT = re.compile(r"^\s*(?:(Q|QQ)|GF\(\s*(\d+)\s*\))\s*$")
_SCALAR_TEXT = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


@dataclass(frozen=True)
class FieldSpec:
    """
    Identifies the coefficient field K.

    Attributes:
        kind: rationals or prime-field
        p: the prime modulus (prime-field only)
    """

    kind: FieldKind = FieldKind.RATIONALS
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == FieldKind.RATIONALS:
            if self.p is not None:
                raise ValueError("the rationals take no modulus")
        elif self.p is None or not is_prime(self.p):
            raise ValueError(f"GF(p) needs a prime modulus, got {self.p}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(FieldKind.PRIME_FIELD, p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """
        Parse ``Q`` or ``GF(p)``.

        Raises:
            ParseError: On anything else, including a non-prime modulus
        """
        match = _FIELD_TEXT.match(text)
        if not match:
            raise ParseError(f"unknown field {text.strip()!r}; expected Q or GF(p)")
        if match.group(1):
            return cls.rationals()
        p = int(match.group(2))
        if not is_prime(p):
            raise ParseError(f"GF({p}): modulus is not prime")
        return cls.prime(p)

    @property
    def is_finite(self) -> bool:
        return self.kind == FieldKind.PRIME_FIELD

    @property
    def size(self) -> Optional[int]:
        """Number of elements, None for the rationals."""
        return self.p

    @property
    def characteristic(self) -> int:
        return self.p if self.is_finite else 0

    @property
    def zero(self) -> Scalar:
        return self.element(0)

    @property
    def one(self) -> Scalar:
        return self.element(1)

    def element(self, value) -> Scalar:
        """
        Canonical representative of ``value`` in this field.

        Accepts ints, Fractions (over GF(p) the denominator is inverted) and
        scalars already in this field.

        Raises:
            FieldMismatchError: value belongs to another field
            ScalarDivisionError: a fraction whose denominator vanishes mod p
        """
        if self.kind == FieldKind.RATIONALS:
            if isinstance(value, GF):
                raise FieldMismatchError(f"GF({value.p}) value used over Q")
            return Fraction(value)
        if isinstance(value, GF):
            if value.p != self.p:
                raise FieldMismatchError(f"GF({value.p}) value used over {self}")
            return value
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ScalarDivisionError(f"{value} has no image in {self}")
            return GF(value.numerator, self.p) / GF(value.denominator, self.p)
        return GF(value, self.p)

    def contains(self, value) -> bool:
        """True if ``value`` is a canonical scalar of this field."""
        if self.kind == FieldKind.RATIONALS:
            return isinstance(value, Fraction)
        return isinstance(value, GF) and value.p == self.p

    def __str__(self) -> str:
        return "Q" if self.kind == FieldKind.RATIONALS else f"GF({self.p})"


QQ = FieldSpec.rationals()


def field_of(value) -> FieldSpec:
    """The field a canonical scalar belongs to."""
    if isinstance(value, GF):
        return FieldSpec.prime(value.p)
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return QQ
    raise TypeError(f"not a scalar: {value!r}")


_OPERATIONS: Dict[str, Callable] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """
    Exact field operation on two scalars.

    Args:
        a: Left operand
        b: Right operand
        op: One of "add", "sub", "mul", "div"

    Returns:
        The result in canonical form

    Raises:
        FieldMismatchError: a and b live over different fields
        ScalarDivisionError: op is "div" and b is zero
    """
    if op not in _OPERATIONS:
        raise ValueError(f"unknown scalar operation {op!r}")
    field = field_of(a)
    if field_of(b) != field:
        raise FieldMismatchError(f"cannot combine {field} with {field_of(b)}")
    if op == "div" and not b:
        raise ScalarDivisionError(f"division by zero over {field}")
    return field.element(_OPERATIONS[op](field.element(a), field.element(b)))


def parse_scalar(text: str, field: FieldSpec = QQ) -> Scalar:
    """
    Parse an integer or a fraction ``a/b``.

    Raises:
        ParseError: Malformed text
        ScalarDivisionError: Zero denominator
    """
    match = _SCALAR_TEXT.match(text)
    if not match:
        raise ParseError(f"not a scalar: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) else 1
    if denominator == 0:
        raise ScalarDivisionError(f"zero denominator in {text!r}")
    return field.element(Fraction(numerator, denominator))


def format_scalar(value: Scalar) -> str:
    """Textual form accepted back by parse_scalar."""
    return str(value)
