"""Qualification engine: evaluate a case against a rulebook to a verdict.

Evaluation walks the tree from the root. Boolean questions take their
answer from the case (an unanswered one blocks with MissingAnswerError —
the signal for an interactive session to ask it). Derived questions are
computed by their registered function unless the case carries an explicit
answer for the node, which wins as a manual override and is flagged as such
in the trace. A derived function may return None to say it cannot decide,
which blocks like an unanswered boolean.
"""

from __future__ import annotations

from dataclasses import dataclass

from .case import AssessmentCase
from .classify import Classification, RiskClass, classify
from .intention import DERIVED_FUNCTIONS, DerivedFunction
from .rulepack import Node, Outcome, Rulebook


class EvaluationError(Exception):
    pass


class MissingAnswerError(EvaluationError):
    """A question on the realized path has no answer and cannot be derived."""

    def __init__(self, node_id: str):
        super().__init__(f"no answer for node '{node_id}'")
        self.node_id = node_id


class UnknownDerivedFunctionError(EvaluationError):
    def __init__(self, node_id: str, function: str):
        super().__init__(
            f"node '{node_id}' uses unregistered derived function '{function}'")
        self.node_id = node_id
        self.function = function


@dataclass(frozen=True)
class TraceStep:
    """One visited node: for questions, the answer and how it was obtained
    (explicit, derived, override); for the final verdict leaf, the reason."""

    node: str
    prompt: str
    answer: bool | None
    citation: str
    answered_by: str | None


@dataclass(frozen=True)
class Verdict:
    qualification: Outcome
    risk_class: RiskClass | None
    classification: Classification | None
    rulebook_id: str
    rulebook_version: str
    trace: tuple[TraceStep, ...]

    @property
    def exit_node(self) -> str:
        return self.trace[-1].node


def _resolve(node: Node, case: AssessmentCase,
             registry: dict[str, DerivedFunction]) -> tuple[bool | None, str | None]:
    """Answer + its provenance for a question node; (None, None) if blocked."""
    explicit = case.answers.get(node.id)
    if explicit is not None:
        by = "override" if node.kind is not None and node.kind.is_derived else "explicit"
        return explicit, by
    if node.kind is not None and node.kind.is_derived:
        fn = registry.get(node.kind.function or "")
        if fn is None:
            raise UnknownDerivedFunctionError(node.id, node.kind.function or "")
        value = fn(case)
        if value is None:
            return None, None
        return bool(value), "derived"
    return None, None


def evaluate(case: AssessmentCase, rb: Rulebook,
             registry: dict[str, DerivedFunction] | None = None) -> Verdict:
    """Walk the rulebook to a verdict leaf and return the cited trace.

    The rulebook must be free of validation errors. Deterministic: the same
    case and rulebook always produce the same verdict, trace included.
    """
    registry = DERIVED_FUNCTIONS if registry is None else registry
    steps: list[TraceStep] = []
    node = rb.node(rb.root)
    visited: set[str] = set()
    while not node.is_verdict:
        if node.id in visited:
            raise EvaluationError(f"cycle at node '{node.id}'")
        visited.add(node.id)
        answer, by = _resolve(node, case, registry)
        if answer is None:
            raise MissingAnswerError(node.id)
        steps.append(TraceStep(node=node.id, prompt=node.prompt, answer=answer,
                               citation=node.citation, answered_by=by))
        node = rb.node(node.branches["yes" if answer else "no"])
    steps.append(TraceStep(node=node.id, prompt=node.reason, answer=None,
                           citation=node.citation, answered_by=None))

    qualification = node.outcome
    classification = None
    if (qualification in (Outcome.MD, Outcome.ACCESSORY)
            and case.classification_profile is not None):
        classification = classify(case.classification_profile,
                                  case.linked_device_class)
    return Verdict(
        qualification=qualification,
        risk_class=classification.risk_class if classification else None,
        classification=classification,
        rulebook_id=rb.id,
        rulebook_version=rb.version,
        trace=tuple(steps),
    )


def next_question(case: AssessmentCase, rb: Rulebook,
                  registry: dict[str, DerivedFunction] | None = None
                  ) -> Node | Verdict:
    """First node on the realized path that blocks evaluation, or the
    Verdict if the path completes. Derived nodes block only when their
    function cannot decide (returns None) and no override exists."""
    registry = DERIVED_FUNCTIONS if registry is None else registry
    node = rb.node(rb.root)
    visited: set[str] = set()
    while not node.is_verdict:
        if node.id in visited:
            raise EvaluationError(f"cycle at node '{node.id}'")
        visited.add(node.id)
        answer, _ = _resolve(node, case, registry)
        if answer is None:
            return node
        node = rb.node(node.branches["yes" if answer else "no"])
    return evaluate(case, rb, registry)


@dataclass(frozen=True)
class WalkState:
    """Interactive view of a case: the question nodes entered so far, the
    node awaiting human input (if any), and whether a leaf was reached."""

    visited: tuple[str, ...]
    blocked: Node | None
    complete: bool


def walk_interaction(case: AssessmentCase, rb: Rulebook,
                     registry: dict[str, DerivedFunction] | None = None
                     ) -> WalkState:
    """Session-style walk: stops at any question needing a human.

    A boolean node without an explicit answer blocks. A derived node
    without an explicit answer auto-advances only when its function says
    yes; a computed no (an exit nobody signed off on) or an undecidable
    None blocks, so the assessor either attaches evidence, overrides, or
    confirms the exit. Explicit answers always advance.
    """
    registry = DERIVED_FUNCTIONS if registry is None else registry
    visited: list[str] = []
    node = rb.node(rb.root)
    seen: set[str] = set()
    while not node.is_verdict:
        if node.id in seen:
            raise EvaluationError(f"cycle at node '{node.id}'")
        seen.add(node.id)
        visited.append(node.id)
        answer, by = _resolve(node, case, registry)
        if answer is None or (by == "derived" and answer is False):
            return WalkState(tuple(visited), node, False)
        node = rb.node(node.branches["yes" if answer else "no"])
    return WalkState(tuple(visited), None, True)


def derived_preview(node: Node, case: AssessmentCase,
                    registry: dict[str, DerivedFunction] | None = None
                    ) -> bool | None:
    """Current computed value of a derived node, ignoring overrides; None
    when the function cannot decide or the node is not derived."""
    registry = DERIVED_FUNCTIONS if registry is None else registry
    if node.kind is None or not node.kind.is_derived:
        return None
    fn = registry.get(node.kind.function or "")
    if fn is None:
        raise UnknownDerivedFunctionError(node.id, node.kind.function or "")
    return fn(case)
