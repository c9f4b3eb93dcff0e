from __future__ import annotations

import itertools

import pytest

from mdsw import (
    AssessmentCase,
    MissingAnswerError,
    Outcome,
    RiskClass,
    UnknownDerivedFunctionError,
    Verdict,
    evaluate,
    next_question,
    parse_rulebook,
    walk_interaction,
)
from conftest import CORPUS_IDS, corpus_case, golden_verdict
from test_evidence import make_item


class TestCorpusVerdicts:
    @pytest.mark.parametrize("case_id", CORPUS_IDS)
    def test_verdict_matches_golden(self, case_id, mdr_rulebook):
        verdict = evaluate(corpus_case(case_id), mdr_rulebook)
        golden = golden_verdict(case_id)
        assert verdict.qualification.value == golden["qualification"]
        assert verdict.exit_node == golden["exit_node"]
        risk = verdict.risk_class.value if verdict.risk_class else None
        assert risk == golden["risk_class"]

    def test_prescription_support_is_md(self, mdr_rulebook):
        verdict = evaluate(corpus_case("c-329-16-prescription"), mdr_rulebook)
        assert verdict.qualification is Outcome.MD
        assert verdict.risk_class is RiskClass.IIA

    def test_generic_software_fails_at_intention(self, mdr_rulebook):
        verdict = evaluate(corpus_case("generic-office"), mdr_rulebook)
        assert verdict.qualification is Outcome.NOT_MD
        intention_step = [s for s in verdict.trace if s.node == "q_intention"]
        assert intention_step[0].answer is False
        assert intention_step[0].answered_by == "derived"

    def test_storage_only_beats_affirming_marketing(self, mdr_rulebook):
        verdict = evaluate(corpus_case("picture-archive"), mdr_rulebook)
        assert verdict.exit_node == "v_storage_only"

    def test_prosthesis_assist_is_accessory_with_linked_class(self, mdr_rulebook):
        verdict = evaluate(corpus_case("prosthesis-assist"), mdr_rulebook)
        assert verdict.qualification is Outcome.ACCESSORY
        assert verdict.risk_class is RiskClass.IIB

    def test_remote_use_without_contact_is_still_md(self, mdr_rulebook):
        case = corpus_case("remote-monitor")
        assert case.answers["q_human_use"] is True
        verdict = evaluate(case, mdr_rulebook)
        assert verdict.qualification is Outcome.MD


class TestTraceContents:
    def test_trace_follows_declared_branches(self, mdr_rulebook):
        verdict = evaluate(corpus_case("c-329-16-prescription"), mdr_rulebook)
        steps = verdict.trace
        assert steps[0].node == mdr_rulebook.root
        for step, nxt in zip(steps, steps[1:]):
            node = mdr_rulebook.node(step.node)
            assert node.branches["yes" if step.answer else "no"] == nxt.node
        assert mdr_rulebook.node(steps[-1].node).is_verdict

    def test_every_step_carries_its_citation(self, mdr_rulebook):
        verdict = evaluate(corpus_case("remote-monitor"), mdr_rulebook)
        for step in verdict.trace:
            assert step.citation == mdr_rulebook.node(step.node).citation
            assert step.citation

    def test_derived_answer_is_flagged_derived(self, mdr_rulebook):
        verdict = evaluate(corpus_case("c-329-16-prescription"), mdr_rulebook)
        by = {s.node: s.answered_by for s in verdict.trace}
        assert by["q_intention"] == "derived"
        assert by["q_purpose_fulfilled"] == "derived"
        assert by["q_is_software"] == "explicit"

    def test_override_wins_and_is_flagged(self, mdr_rulebook):
        # empty evidence, but the intention node carries a manual yes
        case = AssessmentCase(id="override", answers={
            "q_is_software": True, "q_intention": True,
            "q_generic_unmodified": True})
        verdict = evaluate(case, mdr_rulebook)
        assert verdict.exit_node == "v_generic"
        by = {s.node: s.answered_by for s in verdict.trace}
        assert by["q_intention"] == "override"

    def test_replay_is_deterministic(self, mdr_rulebook):
        case = corpus_case("prosthesis-assist")
        assert evaluate(case, mdr_rulebook) == evaluate(case, mdr_rulebook)


class TestBlocking:
    def test_missing_boolean_answer_names_the_node(self, mdr_rulebook):
        case = AssessmentCase(id="partial", evidence=(make_item("mk"),),
                              answers={"q_is_software": True})
        with pytest.raises(MissingAnswerError) as excinfo:
            evaluate(case, mdr_rulebook)
        assert excinfo.value.node_id == "q_generic_unmodified"

    def test_purpose_fulfilled_needs_explicit_answer_without_affirmations(
            self, mdr_rulebook):
        case = AssessmentCase(id="partial", answers={
            "q_is_software": True, "q_intention": True,
            "q_generic_unmodified": False, "q_storage_only": False,
            "q_accessory_intent": False, "q_human_use": True})
        with pytest.raises(MissingAnswerError) as excinfo:
            evaluate(case, mdr_rulebook)
        assert excinfo.value.node_id == "q_purpose_fulfilled"
        case.answers["q_purpose_fulfilled"] = False
        assert evaluate(case, mdr_rulebook).exit_node == "v_no_purpose"

    def test_unknown_derived_function(self):
        source = """
rulebook "odd" version "1"
node q_x { ask "?" kind derived(crystal_ball) cite "x" yes -> v_a no -> v_b }
verdict v_a { outcome MD reason "a" cite "x" }
verdict v_b { outcome NOT_MD reason "b" cite "x" }
"""
        rb = parse_rulebook(source)
        with pytest.raises(UnknownDerivedFunctionError, match="crystal_ball"):
            evaluate(AssessmentCase(id="t"), rb)


class TestNextQuestion:
    def test_empty_case_starts_at_root(self, mdr_rulebook):
        nxt = next_question(AssessmentCase(id="t"), mdr_rulebook)
        assert nxt.id == "q_is_software"

    def test_resumes_mid_path(self, mdr_rulebook):
        case = AssessmentCase(id="t", evidence=(make_item("mk"),), answers={
            "q_is_software": True, "q_generic_unmodified": False,
            "q_storage_only": False, "q_accessory_intent": False})
        nxt = next_question(case, mdr_rulebook)
        assert nxt.id == "q_human_use"

    def test_fully_answered_case_returns_verdict(self, mdr_rulebook):
        nxt = next_question(corpus_case("c-329-16-prescription"), mdr_rulebook)
        assert isinstance(nxt, Verdict)
        assert nxt.qualification is Outcome.MD

    def test_derived_node_is_skipped_when_computable(self, mdr_rulebook):
        case = AssessmentCase(id="t", answers={"q_is_software": True})
        nxt = next_question(case, mdr_rulebook)
        # no evidence: intention computes to no and the path completes
        assert isinstance(nxt, Verdict)
        assert nxt.exit_node == "v_no_intention"


class TestInteractionWalk:
    def test_blocks_on_unconfirmed_derived_no(self, mdr_rulebook):
        # unlike batch evaluation, the interactive walk stops at a derived
        # node whose computed answer would silently end the assessment
        state = walk_interaction(
            AssessmentCase(id="t", answers={"q_is_software": True}), mdr_rulebook)
        assert state.blocked.id == "q_intention"
        assert not state.complete

    def test_advances_through_derived_yes(self, mdr_rulebook):
        case = AssessmentCase(id="t", evidence=(make_item("mk"),),
                              answers={"q_is_software": True})
        state = walk_interaction(case, mdr_rulebook)
        assert state.blocked.id == "q_generic_unmodified"
        assert state.visited == ("q_is_software", "q_intention",
                                 "q_generic_unmodified")

    def test_completes_when_all_input_present(self, mdr_rulebook):
        state = walk_interaction(corpus_case("remote-monitor"), mdr_rulebook)
        assert state.complete and state.blocked is None


class TestGateOrder:
    def test_no_intention_means_not_md_whatever_else_says(self, mdr_rulebook):
        # exhaustive over the remaining questions, via explicit overrides
        others = [q for q in mdr_rulebook.question_ids
                  if q not in ("q_is_software", "q_intention")]
        for values in itertools.product([True, False], repeat=len(others)):
            answers = dict(zip(others, values))
            answers["q_is_software"] = True
            answers["q_intention"] = False
            verdict = evaluate(AssessmentCase(id="t", answers=answers),
                               mdr_rulebook)
            assert verdict.qualification is Outcome.NOT_MD
            assert verdict.exit_node == "v_no_intention"

    def test_md_requires_purpose_fulfilled_yes(self, mdr_rulebook):
        questions = mdr_rulebook.question_ids
        for values in itertools.product([True, False], repeat=len(questions)):
            answers = dict(zip(questions, values))
            verdict = evaluate(AssessmentCase(id="t", answers=answers),
                               mdr_rulebook)
            if verdict.qualification is Outcome.MD:
                assert answers["q_purpose_fulfilled"] is True


class TestRiskClassAttachment:
    def test_no_class_without_profile(self, mdr_rulebook):
        verdict = evaluate(corpus_case("empty-evidence"), mdr_rulebook)
        assert verdict.risk_class is None and verdict.classification is None

    def test_no_class_on_not_md_even_with_profile(self, mdr_rulebook):
        case = corpus_case("c-329-16-prescription")
        case.answers["q_storage_only"] = True
        verdict = evaluate(case, mdr_rulebook)
        assert verdict.qualification is Outcome.NOT_MD
        assert verdict.risk_class is None

    def test_accessory_is_classified_like_a_device(self, mdr_rulebook):
        verdict = evaluate(corpus_case("prosthesis-assist"), mdr_rulebook)
        assert verdict.classification is not None
        assert any("3.3" in rule.citation for rule in verdict.classification.rules)
