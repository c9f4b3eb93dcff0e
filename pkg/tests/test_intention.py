from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mdsw import (
    AssessmentCase,
    EvidenceChannel,
    Polarity,
    PurposeTag,
    SourceKind,
    assess_channel,
    resolve_case,
    resolve_intention,
)
from mdsw.intention import derived_intention, derived_purpose_fulfilled
from test_evidence import make_item, valid_items


class TestAssessChannel:
    def test_affirming_marketing_establishes_direct(self):
        items = [make_item("mk")]
        finding = assess_channel(EvidenceChannel.DIRECT, items)
        assert finding.established
        assert finding.supporting == ("mk",)
        assert finding.contradicting == ()

    def test_wrong_channel_item_is_ignored(self):
        items = [make_item("dg", channel=EvidenceChannel.INDIRECT,
                           source=SourceKind.DATA_GATHERING)]
        finding = assess_channel(EvidenceChannel.DIRECT, items)
        assert not finding.established
        assert finding.supporting == ()

    def test_denial_alone_establishes_nothing(self):
        items = [make_item("sp", channel=EvidenceChannel.INDIRECT,
                           source=SourceKind.SOFTWARE_SPECIFICATION,
                           polarity=Polarity.DENIES, purposes=())]
        finding = assess_channel(EvidenceChannel.INDIRECT, items)
        assert not finding.established
        assert finding.contradicting == ("sp",)

    @given(st.lists(valid_items(), max_size=12))
    def test_channel_partition(self, items):
        # items of the other channel never influence a finding
        for channel in EvidenceChannel:
            own = [i for i in items if i.channel is channel]
            assert assess_channel(channel, items) == assess_channel(channel, own)

    @given(st.lists(valid_items(), max_size=12))
    def test_order_insensitive(self, items):
        for channel in EvidenceChannel:
            assert (assess_channel(channel, items)
                    == assess_channel(channel, list(reversed(items))))

    @given(st.lists(valid_items(), max_size=10), valid_items())
    def test_monotone_in_affirming_evidence(self, items, extra):
        # adding an affirming item never flips established true -> false
        for channel in EvidenceChannel:
            before = assess_channel(channel, items)
            after = assess_channel(channel, items + [extra])
            if before.established:
                assert after.established


class TestResolveIntention:
    def test_direct_prevails_over_indirect_denial(self):
        items = [
            make_item("mk"),
            make_item("sp", channel=EvidenceChannel.INDIRECT,
                      source=SourceKind.SOFTWARE_SPECIFICATION,
                      polarity=Polarity.DENIES, purposes=()),
        ]
        res = resolve_case(items)
        assert res.established
        assert res.prevailing_channel == "direct"

    def test_indirect_alone_suffices(self):
        items = [
            make_item("mk", polarity=Polarity.DENIES, purposes=()),
            make_item("dg", channel=EvidenceChannel.INDIRECT,
                      source=SourceKind.DATA_GATHERING,
                      purposes=[PurposeTag.DISEASE_MONITORING]),
        ]
        res = resolve_case(items)
        assert res.established
        assert res.prevailing_channel == "indirect"

    def test_neither_established(self):
        res = resolve_case([])
        assert not res.established
        assert res.prevailing_channel is None

    def test_both_channels(self):
        items = [make_item("mk"),
                 make_item("dg", channel=EvidenceChannel.INDIRECT,
                           source=SourceKind.DATA_GATHERING)]
        assert resolve_case(items).prevailing_channel == "both"

    def test_channel_mismatch_rejected(self):
        direct = assess_channel(EvidenceChannel.DIRECT, [])
        with pytest.raises(ValueError):
            resolve_intention(direct, direct)

    @settings(max_examples=300)
    @given(st.lists(valid_items(), max_size=12))
    def test_established_iff_an_affirming_item_exists(self, items):
        res = resolve_case(items)
        assert res.established == any(
            i.polarity is Polarity.AFFIRMS for i in items)

    @given(st.lists(valid_items(), max_size=12))
    def test_resolution_is_or_of_findings(self, items):
        res = resolve_case(items)
        assert res.established == (res.direct.established or res.indirect.established)
        if res.established:
            assert res.prevailing_channel in ("direct", "indirect", "both")
        else:
            assert res.prevailing_channel is None


class TestDerivedFunctions:
    def test_intention_true_with_affirming_marketing(self):
        case = AssessmentCase(id="t", evidence=(make_item("mk"),))
        assert derived_intention(case) is True

    def test_intention_false_with_empty_evidence(self):
        assert derived_intention(AssessmentCase(id="t")) is False

    def test_purpose_fulfilled_auto_yes_when_affirmed(self):
        case = AssessmentCase(id="t", evidence=(make_item("mk"),))
        assert derived_purpose_fulfilled(case) is True

    def test_purpose_fulfilled_undecided_without_affirmations(self):
        case = AssessmentCase(id="t", evidence=(
            make_item("mk", polarity=Polarity.DENIES, purposes=()),))
        assert derived_purpose_fulfilled(case) is None
