"""Evidence model: medical purposes and manufacturer-intention sources.

Purposes follow the closed taxonomy of MDR art. 2(1); intention evidence is
split into a direct channel (what the manufacturer says: marketing, internal
documentation, informal statements) and an indirect channel (what the
software does: data gathering, its specification, data analysis).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

from .issues import ValidationIssue, error


class PurposeTag(Enum):
    """Closed set of medical purposes, serialized as dotted lowercase tags.

    Groups: disease.*, injury.*, anatomy.* and invitro.information.
    """

    DISEASE_DIAGNOSIS = "disease.diagnosis"
    DISEASE_PREVENTION = "disease.prevention"
    DISEASE_MONITORING = "disease.monitoring"
    DISEASE_PREDICTION = "disease.prediction"
    DISEASE_PROGNOSIS = "disease.prognosis"
    DISEASE_TREATMENT = "disease.treatment"
    DISEASE_ALLEVIATION = "disease.alleviation"
    INJURY_DIAGNOSIS = "injury.diagnosis"
    INJURY_MONITORING = "injury.monitoring"
    INJURY_TREATMENT = "injury.treatment"
    INJURY_ALLEVIATION = "injury.alleviation"
    INJURY_COMPENSATION = "injury.compensation"
    ANATOMY_INVESTIGATION = "anatomy.investigation"
    ANATOMY_REPLACEMENT = "anatomy.replacement"
    ANATOMY_MODIFICATION = "anatomy.modification"
    INVITRO_INFORMATION = "invitro.information"

    @property
    def group(self) -> str:
        return self.value.split(".", 1)[0]

    @classmethod
    def from_string(cls, tag: str) -> "PurposeTag":
        try:
            return cls(tag)
        except ValueError:
            raise ValueError(f"unknown purpose tag: {tag!r}") from None


class EvidenceChannel(Enum):
    DIRECT = "direct"
    INDIRECT = "indirect"


class SourceKind(Enum):
    # direct channel: what the manufacturer says
    MARKETING = "marketing"
    INTERNAL_DOCUMENTATION = "internal_documentation"
    INFORMAL_STATEMENT = "informal_statement"
    # indirect channel: what the software does
    DATA_GATHERING = "data_gathering"
    SOFTWARE_SPECIFICATION = "software_specification"
    DATA_ANALYSIS = "data_analysis"

    @property
    def channel(self) -> EvidenceChannel:
        if self in (SourceKind.MARKETING, SourceKind.INTERNAL_DOCUMENTATION,
                    SourceKind.INFORMAL_STATEMENT):
            return EvidenceChannel.DIRECT
        return EvidenceChannel.INDIRECT


class Polarity(Enum):
    AFFIRMS = "affirms"
    DENIES = "denies"
    NEUTRAL = "neutral"


@dataclass(frozen=True)
class EvidenceItem:
    """One piece of intention evidence.

    An affirming item must tag at least one purpose; denying and neutral
    items may carry none. Provenance is a free-text locator (URL, court
    filing, document reference).
    """

    id: str
    channel: EvidenceChannel
    source: SourceKind
    polarity: Polarity
    purposes: frozenset[PurposeTag] = frozenset()
    note: str = ""
    provenance: str = ""


def validate_evidence(item: EvidenceItem) -> list[ValidationIssue]:
    """Empty iff the item holds its invariants; issues name the item id."""
    issues: list[ValidationIssue] = []
    if item.source.channel is not item.channel:
        issues.append(error(
            "channel-source-mismatch",
            f"source '{item.source.value}' belongs to the "
            f"{item.source.channel.value} channel, not {item.channel.value}",
            node=item.id))
    if item.polarity is Polarity.AFFIRMS and not item.purposes:
        issues.append(error(
            "missing-purpose",
            "an affirming evidence item must tag at least one purpose",
            node=item.id))
    return issues


def purposes_affirmed(evidence: Iterable[EvidenceItem]) -> frozenset[PurposeTag]:
    """Union of purpose tags over affirming items; denials never erase an
    affirmation and neutral items contribute nothing."""
    tags: set[PurposeTag] = set()
    for item in evidence:
        if item.polarity is Polarity.AFFIRMS:
            tags.update(item.purposes)
    return frozenset(tags)


_EVIDENCE_FIELDS = {"id", "channel", "source", "polarity", "purposes",
                    "note", "provenance"}


def evidence_to_dict(item: EvidenceItem) -> dict:
    return {
        "id": item.id,
        "channel": item.channel.value,
        "source": item.source.value,
        "polarity": item.polarity.value,
        "purposes": sorted(p.value for p in item.purposes),
        "note": item.note,
        "provenance": item.provenance,
    }


def evidence_from_dict(doc: Mapping) -> EvidenceItem:
    """Strict deserialization: unknown fields and unknown tags are errors."""
    unknown = set(doc) - _EVIDENCE_FIELDS
    if unknown:
        raise ValueError(f"unknown evidence fields: {sorted(unknown)}")
    for key in ("id", "channel", "source", "polarity"):
        if key not in doc:
            raise ValueError(f"evidence item missing required field '{key}'")
    try:
        channel = EvidenceChannel(doc["channel"])
    except ValueError:
        raise ValueError(f"unknown evidence channel: {doc['channel']!r}") from None
    try:
        source = SourceKind(doc["source"])
    except ValueError:
        raise ValueError(f"unknown evidence source: {doc['source']!r}") from None
    try:
        polarity = Polarity(doc["polarity"])
    except ValueError:
        raise ValueError(f"unknown evidence polarity: {doc['polarity']!r}") from None
    purposes = frozenset(PurposeTag.from_string(t) for t in doc.get("purposes", []))
    return EvidenceItem(
        id=str(doc["id"]),
        channel=channel,
        source=source,
        polarity=polarity,
        purposes=purposes,
        note=str(doc.get("note", "")),
        provenance=str(doc.get("provenance", "")),
    )
