"""Exceptions and validation reports shared by all modules."""

from __future__ import annotations

from dataclasses import dataclass, field


class NerveLabError(Exception):
    pass


class MissingTableEntry(NerveLabError):
    pass


class BoundaryMismatch(NerveLabError):
    pass


class NonStrictTensor(NerveLabError):
    pass


class InvalidTransformation(NerveLabError):
    pass


class UnknownObject(NerveLabError):
    pass


class UnknownCell(NerveLabError):
    pass


class NonMonotone(NerveLabError):
    pass


class InvalidSimplex(NerveLabError):
    pass


class DiagramInvalid(NerveLabError):
    pass


class NonStrictDiagram(NerveLabError):
    pass


class FibreNotCategory(NerveLabError):
    pass


class BaseNotCategory(NerveLabError):
    pass


class ActionAxiomViolation(NerveLabError):
    pass


class CapMismatch(NerveLabError):
    pass


class CapTooSmall(NerveLabError):
    pass


class EnumerationBudgetExceeded(NerveLabError):
    pass


class TargetSimplexMissing(NerveLabError):
    pass


class AuditFailed(NerveLabError):
    pass


class ParseError(NerveLabError):
    """Syntax error in a workspace file; carries line information."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class ValidationError(NerveLabError):
    """Raised when a parsed structure fails its validator."""

    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


class UnknownKind(NerveLabError):
    pass


@dataclass
class Finding:
    code: str
    message: str
    witness: tuple = ()

    def __str__(self):
        if self.witness:
            return f"{self.code}: {self.message} [witness: {', '.join(map(repr, self.witness))}]"
        return f"{self.code}: {self.message}"


@dataclass
class ValidationReport:
    """List of violated axioms; empty iff the checked value is valid."""

    subject: str = ""
    findings: list = field(default_factory=list)

    def add(self, code, message, witness=()):
        self.findings.append(Finding(code, message, tuple(witness)))

    @property
    def ok(self):
        return not self.findings

    def codes(self):
        return sorted({f.code for f in self.findings})

    def raise_if_failed(self):
        if not self.ok:
            raise ValidationError(self)

    def __str__(self):
        head = f"validation of {self.subject}: " if self.subject else ""
        if self.ok:
            return head + "ok"
        lines = [head + f"{len(self.findings)} finding(s)"]
        lines.extend("  " + str(f) for f in self.findings)
        return "\n".join(lines)
