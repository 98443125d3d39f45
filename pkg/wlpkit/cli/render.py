"""
Text and JSON rendering of check outcomes.

Both renderings are built from the same CheckOutcome, so they always agree
on verdict and witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from ..linalg import Matrix
from ..module import GradedModule
from ..wlp import DirectSumAnalysis, GammaEntry, SubmoduleCertificate, WlpReport


@dataclass
class FormCheck:
    """A user supplied linear form and whether it is a Lefschetz element."""

    text: str
    passed: bool


@dataclass
class CheckOutcome:
    path: str
    module: GradedModule
    report: WlpReport
    name: Optional[str] = None
    certificate: Optional[SubmoduleCertificate] = None
    form: Optional[FormCheck] = None
    analysis: Optional[DirectSumAnalysis] = None
    show_witness: bool = False
    show_trace: bool = False

    @property
    def verdict_text(self) -> str:
        return "WLP" if self.report.verdict else "NO-WLP"


def _hilbert_text(report: WlpReport) -> str:
    hf = report.hilbert
    if hf is None or not hf.values:
        return "0"
    return f"{hf} from degree {hf.shift}"


def render_text(outcome: CheckOutcome) -> str:
    report = outcome.report
    title = outcome.path if not outcome.name else f"{outcome.path}: {outcome.name}"
    lines = [
        title,
        f"  field: {report.field}",
        f"  Hilbert function: {_hilbert_text(report)}",
        f"  method: {report.method}",
        f"  verdict: {outcome.verdict_text}",
    ]
    if outcome.show_witness:
        lines.append(f"  Lefschetz element: {report.witness_text or 'none found'}")
    if outcome.form is not None:
        answer = "yes" if outcome.form.passed else "no"
        lines.append(f"  {outcome.form.text} is a Lefschetz element: {answer}")
    if report.failing_degrees:
        pairs = ", ".join(f"{a} -> {b}" for a, b in report.failing_degrees)
        lines.append(f"  failing degrees: {pairs}")
    if report.generator_degrees:
        gens = ", ".join(f"{count} in degree {d}" for d, count in report.generator_degrees)
        lines.append(f"  minimal generators: {gens}")
    if report.per_degree:
        lines.append("  per degree:")
        for c in report.per_degree:
            flag = "ok" if c.passed else "FAIL"
            dual = " (dualized)" if c.dualized else ""
            lines.append(
                f"    {c.degree} -> {c.degree + 1}  HF ({c.dims[0]},{c.dims[1]})  "
                f"rank {c.generic}/{c.required}  {c.method}{dual}  {flag}"
            )
    if outcome.certificate is not None:
        cert = outcome.certificate
        lines.append(
            f"  decreasing submodule: HF ({cert.dims[0]},{cert.dims[1]}) in degrees "
            f"{cert.degree} -> {cert.degree + 1} from {cert.source.value}"
        )
    if outcome.analysis is not None:
        analysis = outcome.analysis
        verdicts = ", ".join("WLP" if r.verdict else "NO-WLP" for r in analysis.part_reports)
        lines.append(f"  summands: {verdicts}")
        if analysis.behavior_conflicts:
            degrees = ", ".join(f"{d} -> {d + 1}" for d in analysis.behavior_conflicts)
            lines.append(f"  summands increase and decrease together in: {degrees}")
    if outcome.show_trace and report.trace:
        lines.append("  trace:")
        for step in report.trace:
            where = f"[{step.degree}] " if step.degree is not None else ""
            lines.append(f"    {where}{step.kind.value}: {step.message}")
    if report.caveat:
        lines.append(f"  caveat: {report.caveat}")
    return "\n".join(lines) + "\n"


def outcome_dict(outcome: CheckOutcome) -> Dict[str, Any]:
    data = outcome.report.to_dict()
    if not outcome.show_trace:
        data.pop("trace")
    data["file"] = outcome.path
    data["name"] = outcome.name
    data["certificate"] = (
        outcome.certificate.to_dict() if outcome.certificate is not None else None
    )
    if outcome.form is not None:
        data["form"] = {"text": outcome.form.text, "passed": outcome.form.passed}
    if outcome.analysis is not None:
        data["summands"] = outcome.analysis.to_dict()
    return data


def _matrix_lines(name: str, m: Matrix) -> List[str]:
    rows = m.to_lists()
    if not rows:
        return [f"    {name} = []"]
    width = max(len(v) for row in rows for v in row)
    body = ["[" + " ".join(v.rjust(width) for v in row) + "]" for row in rows]
    return [f"    {name} = {body[0]}"] + [" " * (len(name) + 7) + b for b in body[1:]]


def render_gamma_text(path: str, entries: List[GammaEntry]) -> str:
    lines = [path]
    if not entries:
        lines.append("  no degree pairs")
    for entry in entries:
        lines.append(f"  degree {entry.degree} -> {entry.degree + 1}:")
        if not entry.applicable:
            lines.append(f"    not applicable: {entry.reason}")
            continue
        outcome = entry.outcome
        report = outcome.report
        if report.lemma1 is not None:
            lines.append(f"    assignment: {report.lemma1}")
        lines.extend(_matrix_lines("A", outcome.a))
        lines.extend(_matrix_lines("B", outcome.b))
        lines.append(f"    p(gamma) = {outcome.polynomial}")
        lines.append(f"    verdict: {'WLP' if report.verdict else 'NO-WLP'}")
    return "\n".join(lines) + "\n"


def gamma_dict(path: str, entries: List[GammaEntry]) -> Dict[str, Any]:
    pairs = []
    for entry in entries:
        item: Dict[str, Any] = {"degree": entry.degree, "applicable": entry.applicable}
        if entry.applicable:
            report = entry.outcome.report
            item.update(
                lemma1=report.lemma1.to_dict() if report.lemma1 is not None else None,
                A=entry.outcome.a.to_lists(),
                B=entry.outcome.b.to_lists(),
                polynomial=str(entry.outcome.polynomial),
                verdict=report.verdict,
            )
        else:
            item["reason"] = entry.reason
        pairs.append(item)
    return {"file": path, "pairs": pairs}
