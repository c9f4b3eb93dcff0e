"""Risk classification of qualified software under Annex VIII Rule 11 and §3.3.

Every class rule contributes a candidate class; the result is the maximum
over all triggered rules. Severity escalators (serious deterioration, death
or irreversible deterioration, immediate harm) escalate even when their
usual pathway flag is off — those trace entries are marked as derived from
the max-combinator rather than from a literal rule sentence.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from enum import Enum
from functools import total_ordering
from typing import Mapping


@total_ordering
class RiskClass(Enum):
    I = "I"
    IIA = "IIa"
    IIB = "IIb"
    III = "III"

    @property
    def rank(self) -> int:
        return _RANK[self]

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, RiskClass):
            return NotImplemented
        return self.rank < other.rank

    @classmethod
    def from_string(cls, value: str) -> "RiskClass":
        try:
            return cls(value)
        except ValueError:
            raise ValueError(f"unknown risk class: {value!r}") from None


_RANK = {RiskClass.I: 0, RiskClass.IIA: 1, RiskClass.IIB: 2, RiskClass.III: 3}


def max_class(a: RiskClass, b: RiskClass) -> RiskClass:
    return a if a >= b else b


@dataclass(frozen=True)
class ClassificationProfile:
    """The six yes/no facts Rule 11 and §3.3 turn on."""

    informs_diagnosis_or_therapy: bool = False
    can_cause_death_or_irreversible: bool = False
    can_cause_serious_deterioration: bool = False
    monitors_physiological_processes: bool = False
    can_cause_immediate_harm: bool = False
    drives_or_influences_device: bool = False

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, doc: Mapping) -> "ClassificationProfile":
        known = {f.name for f in fields(cls)}
        unknown = set(doc) - known
        if unknown:
            raise ValueError(f"unknown classification fields: {sorted(unknown)}")
        values = {}
        for name in known & set(doc):
            value = doc[name]
            if not isinstance(value, bool):
                raise ValueError(f"classification field '{name}' must be a boolean")
            values[name] = value
        return cls(**values)


@dataclass(frozen=True)
class ClassRule:
    """One triggered classification rule: its contributed class, the legal
    citation, and whether it was derived by the max-combinator instead of a
    literal rule sentence."""

    label: str
    risk_class: RiskClass
    citation: str
    combinator_derived: bool = False

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "risk_class": self.risk_class.value,
            "citation": self.citation,
            "combinator_derived": self.combinator_derived,
        }


@dataclass(frozen=True)
class Classification:
    risk_class: RiskClass
    rules: tuple[ClassRule, ...]


class MissingLinkedClassError(ValueError):
    """Raised when a profile drives or influences a device but no class for
    that device was supplied."""


_RULE11 = "MDR Annex VIII Rule 11"
_SECTION33 = "MDR Annex VIII section 3.3"


def classify(profile: ClassificationProfile,
             linked_device_class: RiskClass | None = None) -> Classification:
    """Assign a risk class: the maximum over all triggered rules.

    Base assumption is class I. Software informing diagnosis or therapy
    decisions is IIa, escalated to IIb by possible serious deterioration and
    to III by possible death or irreversible deterioration; software
    monitoring physiological processes is IIa, escalated to IIb by possible
    immediate harm. Software driving or influencing a device takes at least
    that device's class (its class is then required).
    """
    rules = [ClassRule("software qualifying as a device is assumed class I",
                       RiskClass.I, _RULE11)]
    if profile.informs_diagnosis_or_therapy:
        rules.append(ClassRule(
            "provides information used to take decisions with diagnosis or "
            "therapeutic purposes",
            RiskClass.IIA, f"{_RULE11} (diagnosis/therapy decisions)"))
    if profile.monitors_physiological_processes:
        rules.append(ClassRule(
            "monitors physiological processes",
            RiskClass.IIA, f"{_RULE11} (monitoring of physiological processes)"))
    if profile.can_cause_serious_deterioration:
        rules.append(ClassRule(
            "capable of causing a serious deterioration of a person's health",
            RiskClass.IIB, f"{_RULE11} (serious deterioration of health)",
            combinator_derived=not profile.informs_diagnosis_or_therapy))
    if profile.can_cause_death_or_irreversible:
        rules.append(ClassRule(
            "capable of causing death or an irreversible deterioration of "
            "a person's health",
            RiskClass.III, f"{_RULE11} (death or irreversible deterioration)",
            combinator_derived=not profile.informs_diagnosis_or_therapy))
    if profile.can_cause_immediate_harm:
        rules.append(ClassRule(
            "monitoring that may result in immediate harm to the patient",
            RiskClass.IIB, f"{_RULE11} (immediate harm during monitoring)",
            combinator_derived=not profile.monitors_physiological_processes))
    if profile.drives_or_influences_device:
        if linked_device_class is None:
            raise MissingLinkedClassError(
                "profile drives or influences a device: the class of that "
                "device is required")
        rules.append(ClassRule(
            "drives or influences a device and takes at least its class",
            linked_device_class, f"{_SECTION33} (same class as the device)"))

    result = rules[0].risk_class
    for rule in rules[1:]:
        result = max_class(result, rule.risk_class)
    return Classification(risk_class=result, rules=tuple(rules))
