from .app import Invocation, WlpApp
from .commands import check_form, create_app, load_spec, run_check
from .main import build_parser, main
from .render import CheckOutcome, FormCheck, outcome_dict, render_text
from .specfile import (
    CyclicNode,
    DualNode,
    ModuleSpec,
    QuotientSubmoduleNode,
    ShiftNode,
    SumNode,
    build_module,
    parse_spec,
    print_spec,
)

__all__ = [
    "Invocation",
    "WlpApp",
    "check_form",
    "create_app",
    "load_spec",
    "run_check",
    "build_parser",
    "main",
    "CheckOutcome",
    "FormCheck",
    "outcome_dict",
    "render_text",
    "CyclicNode",
    "DualNode",
    "ModuleSpec",
    "QuotientSubmoduleNode",
    "ShiftNode",
    "SumNode",
    "build_module",
    "parse_spec",
    "print_spec",
]
