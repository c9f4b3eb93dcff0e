"""Decision tables: exhaustive path enumeration of a rulepack.

Compiling a rulebook to a table gives an independent oracle for tree
evaluation: one row per root-to-leaf path, with questions never reached on
a path left unconstrained (don't-care).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .issues import Severity
from .rulepack import Node, Outcome, Rulebook, validate_rulebook


@dataclass(frozen=True)
class TableRow:
    """One root-to-leaf path: the answers that select it (don't-cares
    omitted), the leaf it ends in, and that leaf's outcome."""

    answers: Mapping[str, bool]
    outcome: Outcome
    leaf: str

    def matches(self, assignment: Mapping[str, bool]) -> bool:
        return all(assignment.get(q) == v for q, v in self.answers.items())


@dataclass(frozen=True)
class DecisionTable:
    rulebook_id: str
    rulebook_version: str
    questions: tuple[str, ...]
    rows: tuple[TableRow, ...]

    def lookup(self, assignment: Mapping[str, bool]) -> TableRow:
        """Find the unique row consistent with a full answer assignment."""
        hits = [row for row in self.rows if row.matches(assignment)]
        if len(hits) != 1:
            raise LookupError(
                f"assignment matches {len(hits)} rows, expected exactly 1")
        return hits[0]

    def to_csv(self) -> str:
        """Render the table as CSV: question columns in rulebook order plus
        an outcome column; don't-care cells rendered as '-'."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(list(self.questions) + ["outcome"])
        for row in self.rows:
            cells = []
            for q in self.questions:
                if q in row.answers:
                    cells.append("yes" if row.answers[q] else "no")
                else:
                    cells.append("-")
            writer.writerow(cells + [row.outcome.value])
        return buf.getvalue()


def compile_to_decision_table(rb: Rulebook) -> DecisionTable:
    """Depth-first enumeration of every root-to-leaf path of a validated
    rulebook. Raises ValueError if the rulebook has validation errors."""
    problems = [i for i in validate_rulebook(rb) if i.severity is Severity.ERROR]
    if problems:
        raise ValueError(
            "rulebook has validation errors: "
            + "; ".join(i.message for i in problems))

    rows: list[TableRow] = []
    assignment: dict[str, bool] = {}

    def walk(node: Node) -> None:
        if node.is_verdict:
            rows.append(TableRow(MappingProxyType(dict(assignment)),
                                 node.outcome, node.id))
            return
        for value in (True, False):
            assignment[node.id] = value
            walk(rb.node(node.branches["yes" if value else "no"]))
            del assignment[node.id]

    walk(rb.node(rb.root))
    return DecisionTable(rulebook_id=rb.id, rulebook_version=rb.version,
                         questions=rb.question_ids, rows=tuple(rows))
