"""Qualification and risk classification of software under EU medical-device law.

The package evaluates evidence-backed assessment cases against declarative
rulepacks (decision trees shipped as data) to a qualification verdict —
medical device, accessory, or neither — plus an Annex VIII Rule 11 risk
class, and emits citation-bearing audit traces for every step.
"""

from .builtin import BUILTIN_PACKS, MDR_PACK, MEDDEV_PACK, builtin_rulebooks, load_builtin
from .case import CASE_SCHEMA, AssessmentCase, CaseError, case_from_dict, case_to_dict, load_case
from .classify import (
    Classification,
    ClassificationProfile,
    ClassRule,
    MissingLinkedClassError,
    RiskClass,
    classify,
    max_class,
)
from .engine import (
    EvaluationError,
    MissingAnswerError,
    TraceStep,
    UnknownDerivedFunctionError,
    Verdict,
    WalkState,
    evaluate,
    next_question,
    walk_interaction,
)
from .evidence import (
    EvidenceChannel,
    EvidenceItem,
    Polarity,
    PurposeTag,
    SourceKind,
    purposes_affirmed,
    validate_evidence,
)
from .intention import (
    DERIVED_FUNCTIONS,
    IntentionFinding,
    IntentionResolution,
    assess_channel,
    resolve_case,
    resolve_intention,
)
from .issues import Severity, ValidationIssue, has_errors
from .rulepack import (
    Node,
    Outcome,
    ParseError,
    QuestionKind,
    Rulebook,
    parse_rulebook,
    serialize_rulebook,
    validate_rulebook,
)
from .table import DecisionTable, TableRow, compile_to_decision_table

__version__ = "0.1.0"

__all__ = [
    "AssessmentCase",
    "BUILTIN_PACKS",
    "CASE_SCHEMA",
    "CaseError",
    "Classification",
    "ClassificationProfile",
    "ClassRule",
    "DecisionTable",
    "DERIVED_FUNCTIONS",
    "EvaluationError",
    "EvidenceChannel",
    "EvidenceItem",
    "IntentionFinding",
    "IntentionResolution",
    "MDR_PACK",
    "MEDDEV_PACK",
    "MissingAnswerError",
    "MissingLinkedClassError",
    "Node",
    "Outcome",
    "ParseError",
    "Polarity",
    "PurposeTag",
    "QuestionKind",
    "RiskClass",
    "Rulebook",
    "Severity",
    "SourceKind",
    "TableRow",
    "TraceStep",
    "UnknownDerivedFunctionError",
    "ValidationIssue",
    "Verdict",
    "WalkState",
    "assess_channel",
    "builtin_rulebooks",
    "case_from_dict",
    "case_to_dict",
    "classify",
    "compile_to_decision_table",
    "evaluate",
    "has_errors",
    "load_builtin",
    "load_case",
    "max_class",
    "next_question",
    "parse_rulebook",
    "purposes_affirmed",
    "resolve_case",
    "resolve_intention",
    "serialize_rulebook",
    "validate_evidence",
    "validate_rulebook",
    "walk_interaction",
]
