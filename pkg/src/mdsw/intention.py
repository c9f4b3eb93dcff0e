"""Manufacturer-intention resolution over the two evidence channels.

Intention is established per channel by at least one affirming item of that
channel; when the channels conflict, the affirming one prevails. Software
claimed to be a medical device but incapable of being one in practice (or
the reverse) therefore still counts as intended.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Iterable

from .evidence import EvidenceChannel, EvidenceItem, Polarity, purposes_affirmed

if TYPE_CHECKING:
    from .case import AssessmentCase


@dataclass(frozen=True)
class IntentionFinding:
    """Per-channel outcome: established iff at least one affirming item of
    the channel exists; denying items are listed as contradicting."""

    channel: EvidenceChannel
    established: bool
    supporting: tuple[str, ...]
    contradicting: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "channel": self.channel.value,
            "established": self.established,
            "supporting": list(self.supporting),
            "contradicting": list(self.contradicting),
        }


@dataclass(frozen=True)
class IntentionResolution:
    """Combined view of both channels under the affirming-prevails rule."""

    established: bool
    prevailing_channel: str | None  # "direct" | "indirect" | "both"
    direct: IntentionFinding
    indirect: IntentionFinding

    def to_dict(self) -> dict:
        return {
            "established": self.established,
            "prevailing_channel": self.prevailing_channel,
            "direct": self.direct.to_dict(),
            "indirect": self.indirect.to_dict(),
        }


def assess_channel(channel: EvidenceChannel,
                   evidence: Iterable[EvidenceItem]) -> IntentionFinding:
    """Evaluate one channel in isolation; items of the other channel never
    influence the finding. Item order does not matter (ids are sorted)."""
    supporting: list[str] = []
    contradicting: list[str] = []
    for item in evidence:
        if item.channel is not channel:
            continue
        if item.polarity is Polarity.AFFIRMS:
            supporting.append(item.id)
        elif item.polarity is Polarity.DENIES:
            contradicting.append(item.id)
    return IntentionFinding(
        channel=channel,
        established=bool(supporting),
        supporting=tuple(sorted(supporting)),
        contradicting=tuple(sorted(contradicting)),
    )


def resolve_intention(direct: IntentionFinding,
                      indirect: IntentionFinding) -> IntentionResolution:
    """Apply the affirming-prevails rule: intention is established if either
    channel is, whatever the other channel says."""
    if direct.channel is not EvidenceChannel.DIRECT:
        raise ValueError("first finding must be for the direct channel")
    if indirect.channel is not EvidenceChannel.INDIRECT:
        raise ValueError("second finding must be for the indirect channel")
    established = direct.established or indirect.established
    if direct.established and indirect.established:
        prevailing = "both"
    elif direct.established:
        prevailing = "direct"
    elif indirect.established:
        prevailing = "indirect"
    else:
        prevailing = None
    return IntentionResolution(established=established,
                               prevailing_channel=prevailing,
                               direct=direct, indirect=indirect)


def resolve_case(evidence: Iterable[EvidenceItem]) -> IntentionResolution:
    items = tuple(evidence)
    return resolve_intention(
        assess_channel(EvidenceChannel.DIRECT, items),
        assess_channel(EvidenceChannel.INDIRECT, items),
    )


def derived_intention(case: "AssessmentCase") -> bool:
    """Derived answer for intention question nodes.

    A manual override for the node, when present in the case answers, is
    applied by the evaluator before this function is consulted.
    """
    return resolve_case(case.evidence).established


def derived_purpose_fulfilled(case: "AssessmentCase") -> bool | None:
    """Derived answer for purpose-fulfilment question nodes: yes when the
    evidence affirms at least one purpose, otherwise None — fulfilment in
    practice needs human judgment, so the node must be answered explicitly."""
    if purposes_affirmed(case.evidence):
        return True
    return None


DerivedFunction = Callable[["AssessmentCase"], "bool | None"]

DERIVED_FUNCTIONS: dict[str, DerivedFunction] = {
    "intention": derived_intention,
    "purpose_fulfilled": derived_purpose_fulfilled,
}
