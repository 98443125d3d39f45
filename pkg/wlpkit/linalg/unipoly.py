"""
Univariate polynomials p(γ) over the coefficient field.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from ..exceptions import FieldMismatchError, PreconditionError, ScalarDivisionError
from ..field import QQ, FieldSpec, Scalar


class UniPoly:
    """
    Polynomial in one variable with ascending coefficients.

    No trailing zero coefficient is stored; the zero polynomial has none.
    """

    __slots__ = ("coefficients", "field")

    def __init__(self, coefficients: Sequence = (), field: FieldSpec = QQ):
        coeffs = [field.element(c) for c in coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coefficients: Tuple[Scalar, ...] = tuple(coeffs)
        self.field = field

    @classmethod
    def zero(cls, field: FieldSpec = QQ) -> "UniPoly":
        return cls((), field)

    @classmethod
    def constant(cls, value, field: FieldSpec = QQ) -> "UniPoly":
        return cls((value,), field)

    @classmethod
    def linear(cls, slope, intercept, field: FieldSpec = QQ) -> "UniPoly":
        """slope * γ + intercept."""
        return cls((intercept, slope), field)

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    @property
    def leading_coefficient(self) -> Scalar:
        if not self.coefficients:
            raise PreconditionError("the zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            if other.field != self.field:
                raise FieldMismatchError(f"polynomials over {self.field} and {other.field}")
            return other
        return UniPoly.constant(other, self.field)

    def __add__(self, other) -> "UniPoly":
        other = self._coerce(other)
        n = max(len(self.coefficients), len(other.coefficients))
        zero = self.field.zero
        a = self.coefficients + (zero,) * (n - len(self.coefficients))
        b = other.coefficients + (zero,) * (n - len(other.coefficients))
        return UniPoly([x + y for x, y in zip(a, b)], self.field)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coefficients], self.field)

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UniPoly":
        other = self._coerce(other)
        if not self or not other:
            return UniPoly.zero(self.field)
        product = [self.field.zero] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] = product[i + j] + a * b
        return UniPoly(product, self.field)

    __rmul__ = __mul__

    def __divmod__(self, divisor: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        divisor = self._coerce(divisor)
        if not divisor:
            raise ScalarDivisionError("polynomial division by zero")
        remainder = list(self.coefficients)
        quotient = [self.field.zero] * max(len(remainder) - divisor.degree, 0)
        inv = self.field.one / divisor.leading_coefficient
        for k in range(len(quotient) - 1, -1, -1):
            coeff = remainder[k + divisor.degree] * inv
            quotient[k] = coeff
            if coeff:
                for j, d in enumerate(divisor.coefficients):
                    remainder[k + j] = remainder[k + j] - coeff * d
        return UniPoly(quotient, self.field), UniPoly(remainder, self.field)

    def __floordiv__(self, divisor: "UniPoly") -> "UniPoly":
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: "UniPoly") -> "UniPoly":
        return divmod(self, divisor)[1]

    def exact_div(self, divisor: "UniPoly") -> "UniPoly":
        """Quotient of a division known to be exact."""
        quotient, remainder = divmod(self, divisor)
        if remainder:
            raise PreconditionError(f"{divisor} does not divide {self}")
        return quotient

    def monic(self) -> "UniPoly":
        if not self:
            return self
        inv = self.field.one / self.leading_coefficient
        return UniPoly([c * inv for c in self.coefficients], self.field)

    def evaluate(self, point) -> Scalar:
        """Horner evaluation."""
        point = self.field.element(point)
        value = self.field.zero
        for c in reversed(self.coefficients):
            value = value * point + c
        return value

    __call__ = evaluate

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.field == other.field and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.field, self.coefficients))

    def format(self, variable: str = "gamma") -> str:
        if not self:
            return "0"
        pieces: List[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if not c:
                continue
            negative = not self.field.is_finite and c < 0
            magnitude = -c if negative else c
            power = "" if k == 0 else variable if k == 1 else f"{variable}^{k}"
            if not power:
                body = str(magnitude)
            elif str(magnitude) == "1":
                body = power
            else:
                body = f"{magnitude}*{power}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"UniPoly({self.format()!r}, field={self.field})"


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd; gcd(0, 0) = 0."""
    while b:
        a, b = b, a % b
    return a.monic()


def interpolate(points: Sequence, values: Sequence, field: FieldSpec = QQ) -> UniPoly:
    """
    The polynomial of degree < len(points) through (points[i], values[i]).

    Raises:
        PreconditionError: repeated points or mismatched lengths
    """
    if len(points) != len(values):
        raise PreconditionError("interpolation needs one value per point")
    points = [field.element(p) for p in points]
    if len(set(points)) != len(points):
        raise PreconditionError("interpolation points must be distinct")
    # Newton divided differences
    table = [field.element(v) for v in values]
    n = len(points)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (points[i] - points[i - level])
    result = UniPoly.zero(field)
    for i in range(n - 1, -1, -1):
        result = result * UniPoly.linear(1, -points[i], field) + table[i]
    return result
