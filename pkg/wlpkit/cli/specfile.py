"""
Module specification files.

A file is a list of ``key = value`` lines::

    # HF (1,2,2,2,2) with a generator in degree 4
    name = long indecomposable
    field = Q
    module = submodule(
        ideal = (y^3, x^2*y^2) + (x,y)^6,
        gens = y, x^4
    )

Keys are ``field`` (``Q`` or ``GF(p)``, default ``Q``), ``module`` and the
optional ``name``. ``#`` starts a comment. A value continues onto the next
lines while its parentheses are unbalanced.

Module expressions::

    submodule(ideal = <ideal>, gens = <poly>, ...)
    cyclic(<ideal>)
    sum(<expr>, <expr>, ...)
    dual(<expr>)
    shift(<expr>, <int>)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from ..bipoly import (
    BiPoly,
    IdealGens,
    TokenStream,
    format_ideal,
    format_poly_list,
    read_ideal,
    read_poly_list,
)
from ..exceptions import ParseError
from ..field import QQ, FieldSpec
from ..module import GradedModule, cyclic, direct_sum, dual, from_quotient_submodule, shift

KEYS = ("name", "field", "module")


@dataclass(frozen=True)
class QuotientSubmoduleNode:
    ideal: IdealGens
    gens: Tuple[BiPoly, ...]


@dataclass(frozen=True)
class CyclicNode:
    ideal: IdealGens


@dataclass(frozen=True)
class SumNode:
    children: Tuple["ModuleExpr", ...]


@dataclass(frozen=True)
class DualNode:
    child: "ModuleExpr"


@dataclass(frozen=True)
class ShiftNode:
    child: "ModuleExpr"
    k: int


ModuleExpr = Union[QuotientSubmoduleNode, CyclicNode, SumNode, DualNode, ShiftNode]


@dataclass(frozen=True)
class ModuleSpec:
    """A parsed specification file."""

    field: FieldSpec
    expr: ModuleExpr
    name: Optional[str] = None


@dataclass(frozen=True)
class _Entry:
    key: str
    value: str
    line: int
    column: int


def _strip_comment(line: str) -> str:
    index = line.find("#")
    return line if index < 0 else line[:index] + " " * (len(line) - index)


def _entries(text: str) -> List[_Entry]:
    lines = text.splitlines()
    entries: List[_Entry] = []
    seen: Dict[str, _Entry] = {}
    n = 0
    while n < len(lines):
        raw = _strip_comment(lines[n])
        line_no = n + 1
        n += 1
        if not raw.strip():
            continue
        if "=" not in raw:
            column = len(raw) - len(raw.lstrip()) + 1
            raise ParseError("expected 'key = value'", line_no, column)
        key_part, value = raw.split("=", 1)
        key = key_part.strip()
        key_column = len(key_part) - len(key_part.lstrip()) + 1
        if key not in KEYS:
            raise ParseError(
                f"unknown key {key!r}; expected one of {', '.join(KEYS)}", line_no, key_column
            )
        if key in seen:
            raise ParseError(
                f"duplicate key {key!r}, first given on line {seen[key].line}", line_no, key_column
            )
        value_column = len(key_part) + 2 + (len(value) - len(value.lstrip()))
        value = value.lstrip()
        depth = value.count("(") - value.count(")")
        while depth > 0 and n < len(lines):
            more = _strip_comment(lines[n])
            n += 1
            value += "\n" + more
            depth += more.count("(") - more.count(")")
        entry = _Entry(key, value.rstrip(), line_no, value_column)
        seen[key] = entry
        entries.append(entry)
    return entries


def _read_int(stream: TokenStream) -> int:
    negative = stream.accept("sym", "-") is not None
    value = int(stream.expect("int", what="an integer").text)
    return -value if negative else value


def read_module_expr(stream: TokenStream, field: FieldSpec) -> ModuleExpr:
    """
    Read one module expression.

    Raises:
        ParseError: syntax error, unknown constructor or empty generator list
    """
    token = stream.expect("name", what="a module expression")
    stream.expect("sym", "(")
    if token.text == "submodule":
        stream.expect("name", "ideal")
        stream.expect("sym", "=")
        ideal = read_ideal(stream, field)
        stream.expect("sym", ",")
        stream.expect("name", "gens")
        stream.expect("sym", "=")
        if stream.at("sym", ")"):
            raise stream.error("submodule needs at least one generator")
        node: ModuleExpr = QuotientSubmoduleNode(ideal, tuple(read_poly_list(stream, field)))
    elif token.text == "cyclic":
        node = CyclicNode(read_ideal(stream, field))
    elif token.text == "sum":
        children = [read_module_expr(stream, field)]
        while stream.accept("sym", ","):
            children.append(read_module_expr(stream, field))
        node = SumNode(tuple(children))
    elif token.text == "dual":
        node = DualNode(read_module_expr(stream, field))
    elif token.text == "shift":
        child = read_module_expr(stream, field)
        stream.expect("sym", ",")
        node = ShiftNode(child, _read_int(stream))
    else:
        raise ParseError(
            f"unknown module constructor {token.text!r}; expected submodule, cyclic, sum, dual or shift",
            token.line,
            token.column,
        )
    stream.expect("sym", ")")
    return node


def parse_spec(text: str) -> ModuleSpec:
    """
    Parse a specification file.

    Raises:
        ParseError: with the line and column of the offending text
    """
    entries = {entry.key: entry for entry in _entries(text)}
    field = QQ
    if "field" in entries:
        entry = entries["field"]
        try:
            field = FieldSpec.parse(entry.value)
        except ParseError as exc:
            raise ParseError(exc.message, entry.line, entry.column) from None
    if "module" not in entries:
        raise ParseError("missing key 'module'", len(text.splitlines()) + 1, 1)
    entry = entries["module"]
    stream = TokenStream.from_text(entry.value, entry.line, entry.column)
    expr = read_module_expr(stream, field)
    stream.expect_end()
    name = entries["name"].value if "name" in entries else None
    return ModuleSpec(field, expr, name or None)


def _print_expr(expr: ModuleExpr) -> str:
    if isinstance(expr, QuotientSubmoduleNode):
        return f"submodule(ideal = {format_ideal(expr.ideal)}, gens = {format_poly_list(expr.gens)})"
    if isinstance(expr, CyclicNode):
        return f"cyclic({format_ideal(expr.ideal)})"
    if isinstance(expr, SumNode):
        return "sum(" + ", ".join(_print_expr(c) for c in expr.children) + ")"
    if isinstance(expr, DualNode):
        return f"dual({_print_expr(expr.child)})"
    return f"shift({_print_expr(expr.child)}, {expr.k})"


def print_spec(spec: ModuleSpec) -> str:
    """Canonical text of a specification; parse_spec(print_spec(s)) == s."""
    lines = []
    if spec.name:
        lines.append(f"name = {spec.name}")
    lines.append(f"field = {spec.field}")
    lines.append(f"module = {_print_expr(spec.expr)}")
    return "\n".join(lines) + "\n"


def build_expr(expr: ModuleExpr, field: FieldSpec) -> GradedModule:
    if isinstance(expr, QuotientSubmoduleNode):
        return from_quotient_submodule(expr.ideal, expr.gens, field)
    if isinstance(expr, CyclicNode):
        return cyclic(expr.ideal, field)
    if isinstance(expr, SumNode):
        return direct_sum([build_expr(c, field) for c in expr.children])
    if isinstance(expr, DualNode):
        return dual(build_expr(expr.child, field))
    return shift(build_expr(expr.child, field), expr.k)


def build_module(spec: ModuleSpec) -> GradedModule:
    """
    Raises:
        NonArtinianError: an ideal has infinite colength
        ModuleConstructionError: generators all in the ideal, or not homogeneous
    """
    return build_expr(spec.expr, spec.field)


def summand_modules(spec: ModuleSpec) -> Optional[List[GradedModule]]:
    """The built summands when the top-level expression is a sum."""
    if not isinstance(spec.expr, SumNode):
        return None
    return [build_expr(c, spec.field) for c in spec.expr.children]
