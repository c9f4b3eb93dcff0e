"""Validation issues shared by the rulepack validator and the evidence model."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable


class Severity(Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class ValidationIssue:
    """A single validation finding. Errors block evaluation, warnings do not."""

    severity: Severity
    code: str
    message: str
    node: str | None = None
    line: int | None = None
    col: int | None = None

    def render(self) -> str:
        where = f" node={self.node}" if self.node else ""
        loc = f" (line {self.line}, col {self.col})" if self.line is not None else ""
        return f"{self.severity.value}[{self.code}]{where}: {self.message}{loc}"


def error(code: str, message: str, *, node: str | None = None,
          line: int | None = None, col: int | None = None) -> ValidationIssue:
    return ValidationIssue(Severity.ERROR, code, message, node=node, line=line, col=col)


def warning(code: str, message: str, *, node: str | None = None,
            line: int | None = None, col: int | None = None) -> ValidationIssue:
    return ValidationIssue(Severity.WARNING, code, message, node=node, line=line, col=col)


def has_errors(issues: Iterable[ValidationIssue]) -> bool:
    return any(i.severity is Severity.ERROR for i in issues)
