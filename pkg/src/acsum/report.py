"""Deterministic rendering of verdicts, as text or one-line JSON records.

Given identical inputs the rendered output is byte-identical across
runs, so reports can be used as golden files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .engine import (
    AdmitsCertificate,
    CheckOutcome,
    CongruenceCertificate,
    ObstructionSurvey,
    Verdict,
    VerdictStatus,
)
from .manifolds import pontrjagin_numbers_of

__all__ = ["EXIT_CODES", "Report", "build_report", "render_machine", "render_text"]

EXIT_CODES = {
    VerdictStatus.ADMITS: 0,
    VerdictStatus.NOT_ADMITS: 1,
    VerdictStatus.UNKNOWN: 2,
}


@dataclass(frozen=True)
class Report:
    """A verdict together with the query it answers."""

    query: str
    verdict: Verdict

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.verdict.status]


def build_report(query: str, verdict: Verdict) -> Report:
    return Report(query=query, verdict=verdict)


def _check_line(check) -> str:
    if check.outcome is CheckOutcome.NOT_APPLICABLE:
        return f"check {check.name}: not_applicable"
    return f"check {check.name}: {check.outcome.value} lhs={check.lhs} rhs={check.rhs}"


def _pontrjagin_text(manifold) -> str:
    numbers = pontrjagin_numbers_of(manifold)
    if not numbers:
        return "none"
    return " ".join(f"{key}={numbers[key]}" for key in sorted(numbers))


def render_text(report: Report) -> str:
    """Human-readable key/value report, one field per line."""
    verdict = report.verdict
    manifold = verdict.manifold
    lines = [
        f"query: {report.query}",
        f"summands: {', '.join(manifold.summands) if manifold.summands else manifold.label}",
        f"dimension: {manifold.dimension}",
        f"euler_characteristic: {manifold.euler_characteristic}",
        f"signature: {manifold.signature}",
        f"pontrjagin_numbers: {_pontrjagin_text(manifold)}",
    ]
    lines.extend(_check_line(check) for check in verdict.checks)
    lines.append(f"verdict: {verdict.status.value}")
    certificate = verdict.certificate
    if isinstance(certificate, AdmitsCertificate):
        pairs = " ".join(
            f"{label}:{name}"
            for label, name in zip(
                certificate.summand_labels, certificate.assignment.names
            )
        )
        lines.append(f"assignment: {pairs}")
        lines.append(
            "coefficients: "
            + " ".join(str(k) for k in certificate.coefficients)
        )
        total = certificate.total
        modulus = f" mod {total.modulus}" if total.modulus is not None else ""
        lines.append(f"total_coefficient: {total.k}{modulus} (vanishes)")
    elif isinstance(certificate, CongruenceCertificate):
        check = certificate.check
        lines.append(
            f"failed_check: {check.name} lhs={check.lhs} rhs={check.rhs}"
        )
    elif isinstance(certificate, ObstructionSurvey):
        coefficients = " ".join(str(k) for k in certificate.coefficients)
        lines.append(f"coefficients_observed: {coefficients if coefficients else 'none'}")
        lines.append(
            f"assignments_examined: {certificate.assignments_examined}"
            + (" (exhausted)" if certificate.exhausted else " (bound reached)")
        )
    lines.append(f"exit_code: {report.exit_code}")
    return "\n".join(lines) + "\n"


def _certificate_record(certificate) -> dict:
    if isinstance(certificate, AdmitsCertificate):
        return {
            "kind": "vanishing_obstruction",
            "assignment": [
                {"summand": label, "structure": name}
                for label, name in zip(
                    certificate.summand_labels, certificate.assignment.names
                )
            ],
            "coefficients": list(certificate.coefficients),
            "total": certificate.total.k,
            "modulus": certificate.total.modulus,
        }
    if isinstance(certificate, CongruenceCertificate):
        return {
            "kind": "failed_congruence",
            "check": certificate.check.name,
            "lhs": certificate.check.lhs,
            "rhs": certificate.check.rhs,
        }
    return {
        "kind": "obstruction_survey",
        "coefficients": list(certificate.coefficients),
        "assignments_examined": certificate.assignments_examined,
        "exhausted": certificate.exhausted,
    }


def render_machine(report: Report) -> str:
    """One-line JSON record with sorted keys; stable across runs."""
    verdict = report.verdict
    manifold = verdict.manifold
    record = {
        "query": report.query,
        "summands": list(manifold.summands) if manifold.summands else [manifold.label],
        "dimension": manifold.dimension,
        "euler_characteristic": manifold.euler_characteristic,
        "signature": manifold.signature,
        "pontrjagin_numbers": pontrjagin_numbers_of(manifold),
        "checks": [
            {
                "name": check.name,
                "outcome": check.outcome.value,
                "lhs": check.lhs,
                "rhs": check.rhs,
            }
            for check in verdict.checks
        ],
        "verdict": verdict.status.value,
        "certificate": _certificate_record(verdict.certificate),
        "exit_code": report.exit_code,
    }
    return json.dumps(record, sort_keys=True, separators=(",", ":"))
