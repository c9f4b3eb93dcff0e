"""Stateful assessment sessions over the pure qualification engine.

A session pairs a rulebook with a mutable case and walks it interactively:
answers advance the walk, evidence updates the derived intention, and
re-answering an earlier node invalidates everything recorded after it on
the old path (what-if re-entry). When the walk reaches a verdict leaf the
session finalizes and becomes immutable.
"""

from __future__ import annotations

import secrets
import threading
from collections import defaultdict
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Mapping

from .case import CASE_SCHEMA, AssessmentCase, CaseError, case_from_dict, case_to_dict
from .engine import Verdict, WalkState, derived_preview, evaluate, walk_interaction
from .evidence import EvidenceItem, evidence_from_dict, evidence_to_dict, validate_evidence
from .intention import resolve_case
from .report import report_markdown, report_to_dict, verdict_to_dict
from .rulepack import Node, Rulebook
from .store import SessionStore, UnknownSessionError  # noqa: F401  (re-export)

SESSION_SCHEMA = "mdsw-session/1"


class SessionFault(Exception):
    """Base for session-level errors; carries a stable machine code."""

    code = "session-error"
    http_status = 400

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class UnknownRulebookError(SessionFault):
    code = "unknown-rulebook"
    http_status = 404


class FinalizedSessionError(SessionFault):
    code = "finalized-session"
    http_status = 409


class UnknownNodeError(SessionFault):
    code = "unknown-node"
    http_status = 400


class NodeNotActiveError(SessionFault):
    code = "node-not-active"
    http_status = 409


class InvalidEvidenceError(SessionFault):
    code = "invalid-evidence"
    http_status = 400


class InvalidCaseError(SessionFault):
    code = "invalid-case"
    http_status = 400


class NotFinalizedError(SessionFault):
    code = "not-finalized"
    http_status = 404


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def new_session_id() -> str:
    return secrets.token_hex(16)


@dataclass
class Session:
    id: str
    rulebook_id: str
    rulebook_version: str
    status: str  # "open" | "finalized"
    created: str
    updated: str
    case: AssessmentCase
    verdict_doc: dict | None = None

    @property
    def finalized(self) -> bool:
        return self.status == "finalized"

    def to_doc(self) -> dict:
        return {
            "schema": SESSION_SCHEMA,
            "id": self.id,
            "rulebook": {"id": self.rulebook_id, "version": self.rulebook_version},
            "status": self.status,
            "created": self.created,
            "updated": self.updated,
            "case": case_to_dict(self.case),
            "verdict": self.verdict_doc,
        }

    @classmethod
    def from_doc(cls, doc: Mapping) -> "Session":
        return cls(
            id=doc["id"],
            rulebook_id=doc["rulebook"]["id"],
            rulebook_version=doc["rulebook"]["version"],
            status=doc["status"],
            created=doc["created"],
            updated=doc["updated"],
            case=case_from_dict(doc["case"]),
            verdict_doc=doc.get("verdict"),
        )


class SessionManager:
    """Create, mutate and render sessions; mutations to one session are
    serialized by a per-session lock, reads are lock-free."""

    def __init__(self, store: SessionStore,
                 rulebooks: Mapping[str, Rulebook] | None = None):
        if rulebooks is None:
            from .builtin import builtin_rulebooks
            rulebooks = builtin_rulebooks()
        self.store = store
        self.rulebooks = dict(rulebooks)
        self._locks: dict[str, threading.Lock] = defaultdict(threading.Lock)
        self._locks_guard = threading.Lock()

    def _lock(self, session_id: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks[session_id]

    def rulebook_summaries(self) -> list[dict]:
        return [{"id": rb.id, "version": rb.version}
                for rb in self.rulebooks.values()]

    def _rulebook(self, rulebook_id: str) -> Rulebook:
        try:
            return self.rulebooks[rulebook_id]
        except KeyError:
            raise UnknownRulebookError(
                f"unknown rulebook: {rulebook_id!r}") from None

    # -- lifecycle ---------------------------------------------------------

    def create(self, rulebook_id: str,
               seed_case: Mapping | None = None) -> Session:
        """Open a session; `seed_case` optionally pre-loads a case document
        (evidence, answers, classification profile) to continue from."""
        rb = self._rulebook(rulebook_id)
        if seed_case is None:
            case = AssessmentCase(id=f"session-{rulebook_id}")
        else:
            doc = dict(seed_case)
            doc.setdefault("schema", CASE_SCHEMA)
            doc.setdefault("id", f"session-{rulebook_id}")
            try:
                case = case_from_dict(doc)
            except CaseError as exc:
                raise InvalidCaseError(str(exc)) from None
        now = _now()
        session = Session(
            id=new_session_id(),
            rulebook_id=rb.id,
            rulebook_version=rb.version,
            status="open",
            created=now,
            updated=now,
            case=case,
        )
        self._refresh(session, rb)
        self.store.save(session.to_doc())
        return session

    def get(self, session_id: str) -> Session:
        return Session.from_doc(self.store.load(session_id))

    # -- interaction -------------------------------------------------------

    def walk(self, session: Session) -> WalkState:
        return walk_interaction(session.case, self._rulebook(session.rulebook_id))

    def submit_answer(self, session_id: str, node_id: str, answer: bool) -> Session:
        """Record an answer; re-answering an earlier node drops every answer
        after it on the old path. Finalizes when a leaf is reached."""
        with self._lock(session_id):
            session = self.get(session_id)
            if session.finalized:
                raise FinalizedSessionError(
                    f"session {session_id} is finalized and immutable")
            rb = self._rulebook(session.rulebook_id)
            if node_id not in rb.node_map:
                raise UnknownNodeError(f"unknown node: {node_id!r}")
            if rb.node(node_id).is_verdict:
                raise NodeNotActiveError(
                    f"node '{node_id}' is a verdict leaf and takes no answer")
            state = self.walk(session)
            if node_id not in state.visited:
                raise NodeNotActiveError(
                    f"node '{node_id}' is not the current question nor an "
                    f"earlier step of this session")
            idx = state.visited.index(node_id)
            for downstream in state.visited[idx + 1:]:
                session.case.answers.pop(downstream, None)
            session.case.answers[node_id] = bool(answer)
            self._refresh(session, rb)
            self.store.save(session.to_doc())
            return session

    def attach_evidence(self, session_id: str, item: EvidenceItem | Mapping) -> Session:
        """Add an evidence item and recompute derived questions; if the
        effective answer of a node already walked changes, everything after
        it on the old path is invalidated."""
        with self._lock(session_id):
            session = self.get(session_id)
            if session.finalized:
                raise FinalizedSessionError(
                    f"session {session_id} is finalized and immutable")
            if not isinstance(item, EvidenceItem):
                try:
                    item = evidence_from_dict(item)
                except (ValueError, CaseError) as exc:
                    raise InvalidEvidenceError(str(exc)) from None
            issues = validate_evidence(item)
            if issues:
                raise InvalidEvidenceError("; ".join(i.message for i in issues))
            if any(existing.id == item.id for existing in session.case.evidence):
                raise InvalidEvidenceError(f"duplicate evidence id: {item.id!r}")

            rb = self._rulebook(session.rulebook_id)
            old_state = self.walk(session)
            session.case.evidence = session.case.evidence + (item,)
            new_state = self.walk(session)
            cut = _first_divergence(old_state, new_state)
            if cut is not None:
                for downstream in old_state.visited[cut + 1:]:
                    session.case.answers.pop(downstream, None)
            self._refresh(session, rb)
            self.store.save(session.to_doc())
            return session

    def _refresh(self, session: Session, rb: Rulebook) -> None:
        session.updated = _now()
        state = walk_interaction(session.case, rb)
        if state.complete:
            verdict = evaluate(session.case, rb)
            session.status = "finalized"
            session.verdict_doc = verdict_to_dict(verdict)

    # -- results -----------------------------------------------------------

    def verdict(self, session_id: str) -> dict:
        session = self.get(session_id)
        if not session.finalized or session.verdict_doc is None:
            raise NotFinalizedError(
                f"session {session_id} has no verdict yet")
        return session.verdict_doc

    def intention(self, session: Session) -> dict:
        return resolve_case(session.case.evidence).to_dict()

    def report(self, session_id: str, fmt: str = "json") -> dict | str:
        session = self.get(session_id)
        if not session.finalized or session.verdict_doc is None:
            raise NotFinalizedError(
                f"session {session_id} is not finalized; no report available")
        doc = report_to_dict(session.to_doc(), self.intention(session))
        if fmt == "json":
            return doc
        if fmt == "md":
            return report_markdown(doc)
        raise ValueError(f"unknown report format: {fmt!r}")

    # -- wire payloads -----------------------------------------------------

    def question_payload(self, session: Session, node: Node) -> dict:
        payload = {
            "node": node.id,
            "prompt": node.prompt,
            "kind": node.kind.render() if node.kind else "boolean",
            "citation": node.citation,
        }
        if node.kind is not None and node.kind.is_derived:
            payload["derived_value"] = derived_preview(node, session.case)
        return payload

    def next_payload(self, session: Session) -> dict:
        if session.finalized:
            return {"type": "verdict", "verdict": session.verdict_doc}
        state = self.walk(session)
        assert state.blocked is not None
        return {"type": "question",
                "question": self.question_payload(session, state.blocked)}

    def summary(self, session: Session) -> dict:
        return {
            "id": session.id,
            "rulebook": {"id": session.rulebook_id,
                         "version": session.rulebook_version},
            "status": session.status,
            "created": session.created,
            "updated": session.updated,
        }

    def full_state(self, session: Session) -> dict:
        state = self.summary(session)
        state["case"] = case_to_dict(session.case)
        state["verdict"] = session.verdict_doc
        state["intention"] = self.intention(session)
        state["next"] = self.next_payload(session)
        return state


def _first_divergence(old: WalkState, new: WalkState) -> int | None:
    """Index in old.visited where the two walks part ways, None if the old
    walk is a prefix of the new one (nothing to invalidate)."""
    for i, node_id in enumerate(old.visited):
        if i >= len(new.visited) or new.visited[i] != node_id:
            return i - 1 if i else None
    return None
