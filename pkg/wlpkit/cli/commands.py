"""
The wlpkit commands: check, explain, oracle and gamma.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from pathlib import Path
from typing import List, Optional

from ..bipoly import X, Y, format_poly, parse_poly
from ..exceptions import PreconditionError
from ..middleware import ExceptionMiddleware
from ..module import GradedModule
from ..response import CommandResult, json_result, merge_results, text_result
from ..status import ExitStatus
from ..wlp import (
    decreasing_submodule_certificate,
    direct_sum_wlp_analysis,
    gamma_survey,
    has_wlp,
    verify_witness,
)
from .app import Invocation, WlpApp
from .render import (
    CheckOutcome,
    FormCheck,
    gamma_dict,
    outcome_dict,
    render_gamma_text,
    render_text,
)
from .specfile import ModuleSpec, build_module, parse_spec, summand_modules

logger = logging.getLogger(__name__)


def load_spec(path: str) -> ModuleSpec:
    """
    Raises:
        OSError: unreadable file
        ParseError: malformed file
    """
    return parse_spec(Path(path).read_text(encoding="utf-8"))


def check_form(m: GradedModule, text: str) -> FormCheck:
    """
    Whether the linear form written in ``text`` is a Lefschetz element of m.

    Raises:
        ParseError: not a polynomial
        PreconditionError: not a nonzero linear form
    """
    form = parse_poly(text, m.field)
    if form.is_zero() or not form.is_homogeneous(1):
        raise PreconditionError(f"--form needs a nonzero linear form, got {text!r}")
    alpha, beta = form.coefficient(X), form.coefficient(Y)
    return FormCheck(format_poly(form), verify_witness(m, alpha, beta))


def run_check(
    spec: ModuleSpec,
    invocation: Invocation,
    path: str = "<spec>",
    explain: bool = False,
) -> CheckOutcome:
    """
    Build the module of ``spec`` and decide it.

    ``explain`` adds the summand analysis for a top-level sum and forces the
    witness and the trace into the output.
    """
    module = build_module(spec)
    report = has_wlp(module, invocation.method or "auto", debug=invocation.debug)
    logger.info("%s: %s", path, "WLP" if report.verdict else "no WLP")
    outcome = CheckOutcome(
        path=path,
        module=module,
        report=report,
        name=spec.name,
        show_witness=invocation.witness or explain,
        show_trace=invocation.trace or explain,
    )
    if not report.verdict:
        outcome.certificate = decreasing_submodule_certificate(module)
    if invocation.form:
        outcome.form = check_form(module, invocation.form)
    if explain:
        parts = summand_modules(spec)
        if parts is not None:
            outcome.analysis = direct_sum_wlp_analysis(parts, invocation.method or "auto")
    return outcome


def _status(outcome: CheckOutcome) -> ExitStatus:
    if outcome.form is not None:
        return ExitStatus.from_verdict(outcome.form.passed)
    return ExitStatus.from_verdict(outcome.report.verdict)


def _outcome_result(outcome: CheckOutcome, as_json: bool) -> CommandResult:
    if as_json:
        return json_result(outcome_dict(outcome), _status(outcome))
    return text_result(render_text(outcome), _status(outcome))


def _check_file(path: str, invocation: Invocation, explain: bool = False) -> CommandResult:
    outcome = run_check(load_spec(path), invocation, path, explain)
    return _outcome_result(outcome, invocation.json)


def _single_path(invocation: Invocation) -> str:
    if len(invocation.paths) != 1:
        raise PreconditionError(
            f"{invocation.command} takes exactly one file, got {len(invocation.paths)}"
        )
    return invocation.paths[0]


def check(invocation: Invocation) -> CommandResult:
    """Decide the WLP for every file; output follows the input order."""
    if not invocation.paths:
        raise PreconditionError("check needs at least one file")
    guard = ExceptionMiddleware("debug" if invocation.debug else "production")

    def one(path: str) -> CommandResult:
        result = guard(path, lambda p: _check_file(p, invocation))
        if result.exit_status is ExitStatus.ERROR:
            result.stderr = f"{path}: {result.stderr}"
        return result

    if len(invocation.paths) == 1:
        return one(invocation.paths[0])
    with ThreadPoolExecutor(max_workers=invocation.jobs) as executor:
        results: List[CommandResult] = list(executor.map(one, invocation.paths))
    if not invocation.json:
        return merge_results(results)
    payload = [
        r.data if r.data is not None else {"file": path, "error": r.stderr.strip()}
        for path, r in zip(invocation.paths, results)
    ]
    merged = json_result(payload, ExitStatus.combine(r.exit_status for r in results))
    merged.stderr = "".join(r.stderr for r in results)
    return merged


def explain(invocation: Invocation) -> CommandResult:
    """Decide one file and print everything: witness, trace, certificates."""
    return _check_file(_single_path(invocation), invocation, explain=True)


def oracle(invocation: Invocation) -> CommandResult:
    """Decide one file with the pencil oracle only."""
    path = _single_path(invocation)
    outcome = run_check(load_spec(path), replace(invocation, method="oracle", debug=False), path)
    return _outcome_result(outcome, invocation.json)


def gamma(invocation: Invocation) -> CommandResult:
    """Print the determinant data of every square pair generated in degree 0."""
    path = _single_path(invocation)
    module = build_module(load_spec(path))
    entries = gamma_survey(module)
    verdict = all(e.outcome.report.verdict for e in entries if e.applicable)
    status = ExitStatus.from_verdict(verdict)
    if invocation.json:
        return json_result(gamma_dict(path, entries), status)
    return text_result(render_gamma_text(path, entries), status)


def create_app(
    default_method: str = "auto",
    debug: Optional[bool] = None,
    max_workers: Optional[int] = None,
) -> WlpApp:
    """The application with the four built-in commands registered."""
    app = WlpApp(default_method=default_method, debug=debug, max_workers=max_workers)
    app.add_command("check", check)
    app.add_command("explain", explain)
    app.add_command("oracle", oracle)
    app.add_command("gamma", gamma)
    return app
