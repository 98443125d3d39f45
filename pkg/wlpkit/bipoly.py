"""
Bivariate polynomials in x, y with exact coefficients.

Includes the token-level reader for polynomials, polynomial lists and ideal
expressions. The module-specification parser in ``wlpkit.cli.specfile``
reuses the same token stream so that every error carries a line and column.

Grammar (ASCII):

    poly   := ['+'|'-'] term (('+'|'-') term)*
    term   := coeff | [coeff '*'] factor ('*' factor)*
    factor := ('x'|'y') ['^' int]
    coeff  := int | int '/' int
    ideal  := group ('+' group)*
    group  := '(' poly (',' poly)* ')' ['^' int]      -- only (x,y) may carry a power
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Tuple

from .exceptions import FieldMismatchError, ParseError, PreconditionError
from .field import QQ, FieldSpec, Scalar


class Monomial(NamedTuple):
    """x^a * y^b."""

    a: int
    b: int

    @property
    def degree(self) -> int:
        return self.a + self.b

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(self.a + other.a, self.b + other.b)

    def divides(self, other: "Monomial") -> bool:
        return self.a <= other.a and self.b <= other.b

    def quotient(self, divisor: "Monomial") -> "Monomial":
        """self / divisor; the caller guarantees divisibility."""
        return Monomial(self.a - divisor.a, self.b - divisor.b)

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(self.a, other.a), max(self.b, other.b))

    def sort_key(self) -> Tuple[int, int]:
        """Degree-lexicographic key with x > y."""
        return (self.a + self.b, self.a)

    def __str__(self) -> str:
        factors = []
        for name, exponent in (("x", self.a), ("y", self.b)):
            if exponent == 1:
                factors.append(name)
            elif exponent > 1:
                factors.append(f"{name}^{exponent}")
        return "*".join(factors) or "1"


ONE = Monomial(0, 0)
X = Monomial(1, 0)
Y = Monomial(0, 1)


def monomials_of_degree(d: int) -> List[Monomial]:
    """All monomials of total degree d, deglex-descending (x^d first)."""
    return [Monomial(a, d - a) for a in range(d, -1, -1)]


class BiPoly:
    """
    An element of K[x, y].

    Terms are kept in a mapping Monomial -> nonzero scalar; the zero
    polynomial has no terms. Instances are treated as immutable.
    """

    __slots__ = ("_terms", "field")

    def __init__(
        self,
        terms: Optional[Mapping[Monomial, object]] = None,
        field: FieldSpec = QQ,
    ):
        self.field = field
        clean: Dict[Monomial, Scalar] = {}
        for mono, coeff in (terms or {}).items():
            value = field.element(coeff)
            if value:
                clean[Monomial(*mono)] = value
        self._terms = clean

    @classmethod
    def _trusted(cls, terms: Dict[Monomial, Scalar], field: FieldSpec) -> "BiPoly":
        poly = cls.__new__(cls)
        poly.field = field
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls, field: FieldSpec = QQ) -> "BiPoly":
        return cls._trusted({}, field)

    @classmethod
    def constant(cls, value, field: FieldSpec = QQ) -> "BiPoly":
        return cls({ONE: value}, field)

    @classmethod
    def monomial(
        cls, mono: Monomial, coeff=1, field: FieldSpec = QQ
    ) -> "BiPoly":
        return cls({mono: coeff}, field)

    @classmethod
    def linear_form(cls, alpha, beta, field: FieldSpec = QQ) -> "BiPoly":
        """alpha*x + beta*y."""
        return cls({X: alpha, Y: beta}, field)

    @property
    def terms(self) -> Mapping[Monomial, Scalar]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, mono: Monomial) -> Scalar:
        return self._terms.get(mono, self.field.zero)

    def sorted_terms(self) -> List[Tuple[Monomial, Scalar]]:
        """Terms in deglex-descending order."""
        return sorted(
            self._terms.items(), key=lambda item: item[0].sort_key(), reverse=True
        )

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((mono.degree for mono in self._terms), default=-1)

    def is_homogeneous(self, d: Optional[int] = None) -> bool:
        """True if every term has degree d (any common degree when d is None)."""
        degrees = {mono.degree for mono in self._terms}
        if d is None:
            return len(degrees) <= 1
        return degrees <= {d}

    def homogeneous_component(self, d: int) -> "BiPoly":
        return BiPoly._trusted(
            {m: c for m, c in self._terms.items() if m.degree == d}, self.field
        )

    @property
    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self._terms, key=Monomial.sort_key)

    @property
    def leading_coefficient(self) -> Scalar:
        return self._terms[self.leading_monomial]

    def monic(self) -> "BiPoly":
        return self.scale(self.field.one / self.leading_coefficient)

    def scale(self, c) -> "BiPoly":
        c = self.field.element(c)
        if not c:
            return BiPoly.zero(self.field)
        return BiPoly._trusted({m: v * c for m, v in self._terms.items()}, self.field)

    def mul_monomial(self, mono: Monomial, c=1) -> "BiPoly":
        c = self.field.element(c)
        if not c:
            return BiPoly.zero(self.field)
        return BiPoly._trusted(
            {m.times(mono): v * c for m, v in self._terms.items()}, self.field
        )

    def _check_field(self, other: "BiPoly") -> None:
        if other.field != self.field:
            raise FieldMismatchError(
                f"cannot combine polynomials over {self.field} and {other.field}"
            )

    def _coerce(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            self._check_field(other)
            return other
        return BiPoly.constant(other, self.field)

    def __add__(self, other) -> "BiPoly":
        other = self._coerce(other)
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            value = terms.get(mono, self.field.zero) + coeff
            if value:
                terms[mono] = value
            else:
                terms.pop(mono, None)
        return BiPoly._trusted(terms, self.field)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._trusted({m: -c for m, c in self._terms.items()}, self.field)

    def __sub__(self, other) -> "BiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "BiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            return self.scale(other)
        self._check_field(other)
        terms: Dict[Monomial, Scalar] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = m1.times(m2)
                terms[mono] = terms.get(mono, self.field.zero) + c1 * c2
        return BiPoly._trusted({m: c for m, c in terms.items() if c}, self.field)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BiPoly":
        if exponent < 0:
            raise ValueError("negative exponent")
        result = BiPoly.constant(1, self.field)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.field == other.field and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.field, frozenset(self._terms.items())))

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"BiPoly({format_poly(self)!r}, field={self.field})"


def poly_arith(f: BiPoly, g: BiPoly, op: str) -> BiPoly:
    """
    Exact ring operation on two polynomials.

    Args:
        f: Left operand
        g: Right operand
        op: One of "add", "sub", "mul"

    Raises:
        FieldMismatchError: f and g live over different fields
    """
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown polynomial operation {op!r}")


def homogeneous_component(f: BiPoly, d: int) -> BiPoly:
    """Sum of the terms of f of total degree exactly d."""
    if d < 0:
        raise PreconditionError(f"degree must be nonnegative, got {d}")
    return f.homogeneous_component(d)


@dataclass(frozen=True)
class IdealGens:
    """Generators of a homogeneous ideal of K[x, y]."""

    gens: Tuple[BiPoly, ...]

    def __post_init__(self):
        gens = tuple(self.gens)
        object.__setattr__(self, "gens", gens)
        if not gens:
            raise PreconditionError("an ideal needs at least one generator")
        field = gens[0].field
        for g in gens:
            if g.field != field:
                raise FieldMismatchError("ideal generators over different fields")
            if g.is_zero():
                raise PreconditionError("ideal generators must be nonzero")
            if not g.is_homogeneous():
                raise PreconditionError(f"ideal generator {g} is not homogeneous")

    @property
    def field(self) -> FieldSpec:
        return self.gens[0].field

    def __add__(self, other: "IdealGens") -> "IdealGens":
        return IdealGens(self.gens + other.gens)

    def __iter__(self) -> Iterator[BiPoly]:
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        return format_ideal(self)


def expand_power_ideal(e: int, field: FieldSpec = QQ) -> IdealGens:
    """
    Generators of (x, y)^e: x^e, x^(e-1)*y, ..., y^e.

    Raises:
        PreconditionError: e < 1
    """
    if e < 1:
        raise PreconditionError(f"(x,y)^e needs e >= 1, got {e}")
    return IdealGens(tuple(BiPoly.monomial(m, 1, field) for m in monomials_of_degree(e)))


# Printing


def _format_coefficient(value: Scalar, mono: Monomial) -> str:
    text = str(value)
    if mono == ONE:
        return text
    if text == "1":
        return str(mono)
    return f"{text}*{mono}"


def format_poly(f: BiPoly) -> str:
    """Canonical text, deglex-descending with x > y; parse_poly reads it back."""
    if f.is_zero():
        return "0"
    pieces: List[str] = []
    for mono, coeff in f.sorted_terms():
        negative = not f.field.is_finite and coeff < 0
        body = _format_coefficient(-coeff if negative else coeff, mono)
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


def format_poly_list(polys: Iterable[BiPoly]) -> str:
    return ", ".join(format_poly(f) for f in polys)


def format_ideal(ideal: IdealGens) -> str:
    return f"({format_poly_list(ideal.gens)})"


# Reading


@dataclass(frozen=True)
class Token:
    """A lexical token with its 1-based source position."""

    kind: str  # "int", "name", "sym" or "end"
    text: str
    line: int
    column: int

    def describe(self) -> str:
        return "end of input" if self.kind == "end" else repr(self.text)


_SYMBOLS = "()+-*/^,="


def tokenize(text: str, line: int = 1, column: int = 1) -> List[Token]:
    """
    Split text into tokens, tracking line and column from the given origin.

    Raises:
        ParseError: On a character outside the grammar
    """
    tokens: List[Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            column += 1
            continue
        if ch.isdigit() or ch.isalpha() or ch == "_":
            j = i + 1
            if ch.isdigit():
                while j < len(text) and text[j].isdigit():
                    j += 1
                kind = "int"
            else:
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                kind = "name"
            tokens.append(Token(kind, text[i:j], line, column))
            column += j - i
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(Token("sym", ch, line, column))
            i += 1
            column += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, column)
    tokens.append(Token("end", "", line, column))
    return tokens


class TokenStream:
    """Cursor over a token list with the usual accept/expect helpers."""

    def __init__(self, tokens: List[Token]):
        self._tokens = tokens
        self._pos = 0

    @classmethod
    def from_text(cls, text: str, line: int = 1, column: int = 1) -> "TokenStream":
        return cls(tokenize(text, line, column))

    def peek(self, offset: int = 0) -> Token:
        index = min(self._pos + offset, len(self._tokens) - 1)
        return self._tokens[index]

    def next(self) -> Token:
        token = self.peek()
        if token.kind != "end":
            self._pos += 1
        return token

    def at(self, kind: str, text: Optional[str] = None) -> bool:
        token = self.peek()
        return token.kind == kind and (text is None or token.text == text)

    def accept(self, kind: str, text: Optional[str] = None) -> Optional[Token]:
        if self.at(kind, text):
            return self.next()
        return None

    def expect(
        self, kind: str, text: Optional[str] = None, what: Optional[str] = None
    ) -> Token:
        if self.at(kind, text):
            return self.next()
        raise self.error(f"expected {what or repr(text or kind)}")

    def error(self, message: str, token: Optional[Token] = None) -> ParseError:
        token = token or self.peek()
        return ParseError(f"{message}, found {token.describe()}", token.line, token.column)

    def expect_end(self) -> None:
        if not self.at("end"):
            raise self.error("unexpected trailing input")


def read_coefficient(stream: TokenStream, field: FieldSpec) -> Scalar:
    numerator = int(stream.expect("int", what="a coefficient").text)
    denominator = 1
    if stream.accept("sym", "/"):
        token = stream.expect("int", what="a denominator")
        denominator = int(token.text)
        if denominator == 0:
            raise ParseError("zero denominator", token.line, token.column)
    return field.element(Fraction(numerator, denominator))


def read_factor(stream: TokenStream) -> Monomial:
    token = stream.expect("name", what="variable x or y")
    if token.text not in ("x", "y"):
        raise ParseError(f"unknown variable {token.text!r}", token.line, token.column)
    exponent = 1
    if stream.accept("sym", "^"):
        exponent = int(stream.expect("int", what="an exponent").text)
    return Monomial(exponent, 0) if token.text == "x" else Monomial(0, exponent)


def read_term(stream: TokenStream, field: FieldSpec) -> BiPoly:
    coeff = field.one
    if stream.at("int"):
        coeff = read_coefficient(stream, field)
        if not stream.accept("sym", "*"):
            return BiPoly.constant(coeff, field)
    mono = read_factor(stream)
    while stream.accept("sym", "*"):
        mono = mono.times(read_factor(stream))
    return BiPoly.monomial(mono, coeff, field)


def read_poly(stream: TokenStream, field: FieldSpec) -> BiPoly:
    negate = False
    if stream.accept("sym", "-"):
        negate = True
    else:
        stream.accept("sym", "+")
    result = read_term(stream, field)
    if negate:
        result = -result
    while stream.at("sym", "+") or stream.at("sym", "-"):
        sign = stream.next().text
        term = read_term(stream, field)
        result = result + term if sign == "+" else result - term
    return result


def read_poly_list(stream: TokenStream, field: FieldSpec) -> List[BiPoly]:
    polys = [read_poly(stream, field)]
    while stream.accept("sym", ","):
        polys.append(read_poly(stream, field))
    return polys


def read_ideal(stream: TokenStream, field: FieldSpec) -> IdealGens:
    gens: List[BiPoly] = []
    while True:
        opening = stream.expect("sym", "(")
        group = read_poly_list(stream, field)
        stream.expect("sym", ")")
        power_token = stream.peek()
        if stream.accept("sym", "^"):
            exponent_token = stream.expect("int", what="an exponent")
            maximal = {BiPoly.monomial(X, 1, field), BiPoly.monomial(Y, 1, field)}
            if len(group) != 2 or set(group) != maximal:
                raise ParseError(
                    "only (x,y) may carry a power", power_token.line, power_token.column
                )
            exponent = int(exponent_token.text)
            if exponent < 1:
                raise ParseError(
                    "(x,y)^e needs e >= 1", exponent_token.line, exponent_token.column
                )
            group = list(expand_power_ideal(exponent, field).gens)
        for g in group:
            if g.is_zero() or not g.is_homogeneous():
                raise ParseError(
                    f"ideal generator {g} must be nonzero and homogeneous",
                    opening.line,
                    opening.column,
                )
        gens.extend(group)
        if not stream.accept("sym", "+"):
            return IdealGens(tuple(gens))


def parse_poly(text: str, field: FieldSpec = QQ) -> BiPoly:
    """
    Parse a polynomial written in the grammar above.

    Raises:
        ParseError: Syntax error or unknown variable, with its position
    """
    stream = TokenStream.from_text(text)
    poly = read_poly(stream, field)
    stream.expect_end()
    return poly


def parse_poly_list(text: str, field: FieldSpec = QQ) -> List[BiPoly]:
    stream = TokenStream.from_text(text)
    polys = read_poly_list(stream, field)
    stream.expect_end()
    return polys


def parse_ideal(text: str, field: FieldSpec = QQ) -> IdealGens:
    """
    Parse an ideal expression such as ``(x,y)^8 + (x^2*y^5, x^4*y^3)``.

    Raises:
        ParseError: Syntax error, a powered group other than (x,y), or a
            generator that is zero or not homogeneous
    """
    stream = TokenStream.from_text(text)
    ideal = read_ideal(stream, field)
    stream.expect_end()
    return ideal
