"""Assessment cases: the software under assessment, as data.

A case bundles the intention evidence, any explicit answers (including
overrides of derived questions), and the optional classification inputs.
Cases serialize as JSON documents with schema tag "mdsw-case/1"; unknown
fields are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .classify import ClassificationProfile, RiskClass
from .evidence import EvidenceItem, evidence_from_dict, evidence_to_dict

CASE_SCHEMA = "mdsw-case/1"

_CASE_FIELDS = {"schema", "id", "name", "description", "evidence", "answers",
                "classification_profile", "linked_device_class"}


class CaseError(ValueError):
    """Malformed case document."""


@dataclass
class AssessmentCase:
    id: str
    name: str = ""
    description: str = ""
    evidence: tuple[EvidenceItem, ...] = ()
    answers: dict[str, bool] = field(default_factory=dict)
    classification_profile: ClassificationProfile | None = None
    linked_device_class: RiskClass | None = None


def case_to_dict(case: AssessmentCase) -> dict:
    return {
        "schema": CASE_SCHEMA,
        "id": case.id,
        "name": case.name,
        "description": case.description,
        "evidence": [evidence_to_dict(item) for item in case.evidence],
        "answers": dict(case.answers),
        "classification_profile": (case.classification_profile.to_dict()
                                   if case.classification_profile else None),
        "linked_device_class": (case.linked_device_class.value
                                if case.linked_device_class else None),
    }


def case_from_dict(doc: Mapping) -> AssessmentCase:
    if not isinstance(doc, Mapping):
        raise CaseError("case document must be a JSON object")
    unknown = set(doc) - _CASE_FIELDS
    if unknown:
        raise CaseError(f"unknown case fields: {sorted(unknown)}")
    schema = doc.get("schema")
    if schema != CASE_SCHEMA:
        raise CaseError(f"expected schema {CASE_SCHEMA!r}, got {schema!r}")
    if "id" not in doc:
        raise CaseError("case document missing required field 'id'")

    evidence: list[EvidenceItem] = []
    seen_ids: set[str] = set()
    for i, raw in enumerate(doc.get("evidence", [])):
        try:
            item = evidence_from_dict(raw)
        except ValueError as exc:
            raise CaseError(f"evidence[{i}]: {exc}") from None
        if item.id in seen_ids:
            raise CaseError(f"duplicate evidence id: {item.id!r}")
        seen_ids.add(item.id)
        evidence.append(item)

    answers: dict[str, bool] = {}
    for node_id, value in dict(doc.get("answers") or {}).items():
        if not isinstance(value, bool):
            raise CaseError(f"answer for '{node_id}' must be true or false")
        answers[node_id] = value

    profile_doc = doc.get("classification_profile")
    profile = None
    if profile_doc is not None:
        try:
            profile = ClassificationProfile.from_dict(profile_doc)
        except ValueError as exc:
            raise CaseError(str(exc)) from None

    linked_raw = doc.get("linked_device_class")
    linked = None
    if linked_raw is not None:
        try:
            linked = RiskClass.from_string(linked_raw)
        except ValueError as exc:
            raise CaseError(str(exc)) from None

    return AssessmentCase(
        id=str(doc["id"]),
        name=str(doc.get("name", "")),
        description=str(doc.get("description", "")),
        evidence=tuple(evidence),
        answers=answers,
        classification_profile=profile,
        linked_device_class=linked,
    )


def load_case(path: str | Path) -> AssessmentCase:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CaseError(f"{path}: not valid JSON: {exc}") from None
    return case_from_dict(doc)
