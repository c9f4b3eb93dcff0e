"""Rendering of verdicts and session reports, as JSON documents or Markdown.

There is a single rendering path: the Markdown renderers consume the same
plain dictionaries that are emitted as JSON, so a JSON verdict re-renders
to exactly the Markdown the engine itself would print. All ordering is
deterministic; regenerating a report never changes a byte.
"""

from __future__ import annotations

import json
from typing import Mapping

from .engine import Verdict

REPORT_SCHEMA = "mdsw-report/1"


def verdict_to_dict(verdict: Verdict) -> dict:
    return {
        "qualification": verdict.qualification.value,
        "risk_class": verdict.risk_class.value if verdict.risk_class else None,
        "exit_node": verdict.exit_node,
        "rulebook": {"id": verdict.rulebook_id, "version": verdict.rulebook_version},
        "trace": [
            {
                "node": step.node,
                "prompt": step.prompt,
                "answer": step.answer,
                "citation": step.citation,
                "answered_by": step.answered_by,
            }
            for step in verdict.trace
        ],
        "classification": (
            [rule.to_dict() for rule in verdict.classification.rules]
            if verdict.classification else None),
    }


def verdict_json(verdict: Verdict) -> str:
    return json.dumps(verdict_to_dict(verdict), indent=2) + "\n"


def _answer_cell(step: Mapping) -> str:
    if step["answer"] is None:
        return "—"
    return "yes" if step["answer"] else "no"


def verdict_markdown(doc: Mapping) -> str:
    """Markdown for a verdict dict (the verdict_to_dict / JSON shape)."""
    rb = doc["rulebook"]
    final = doc["trace"][-1]
    lines = [
        "## Verdict",
        "",
        f"**{doc['qualification']}** — {final['prompt']}",
        "",
        f"- Rulebook: `{rb['id']}` version `{rb['version']}`",
        f"- Exit node: `{doc['exit_node']}` ({final['citation']})",
    ]
    if doc["risk_class"] is not None:
        lines.append(f"- Risk class: **{doc['risk_class']}**")
    lines += ["", "### Reasoning trace", "",
              "| # | Node | Question / reason | Answer | Source | Citation |",
              "|---|------|-------------------|--------|--------|----------|"]
    for i, step in enumerate(doc["trace"], start=1):
        by = step["answered_by"] or "verdict"
        lines.append(
            f"| {i} | `{step['node']}` | {_md_cell(step['prompt'])} "
            f"| {_answer_cell(step)} | {by} | {_md_cell(step['citation'])} |")
    if doc.get("classification"):
        lines += ["", "### Classification rules applied", ""]
        for rule in doc["classification"]:
            marker = " (combinator-derived)" if rule["combinator_derived"] else ""
            lines.append(f"- **{rule['risk_class']}** — {rule['label']}"
                         f"{marker} ({rule['citation']})")
    return "\n".join(lines) + "\n"


def _md_cell(text: str) -> str:
    return text.replace("|", "\\|").replace("\n", " ")


def report_to_dict(session_doc: Mapping, intention: Mapping) -> dict:
    """Report document for a finalized session.

    Bundles the verdict with the evidence inventory and the intention
    resolution so the reasoning is auditable from the report alone.
    """
    case = session_doc["case"]
    return {
        "schema": REPORT_SCHEMA,
        "session": {
            "id": session_doc["id"],
            "rulebook": dict(session_doc["rulebook"]),
            "created": session_doc["created"],
            "updated": session_doc["updated"],
        },
        "case": {
            "id": case["id"],
            "name": case["name"],
            "description": case["description"],
        },
        "verdict": session_doc["verdict"],
        "evidence": list(case["evidence"]),
        "answers": dict(case["answers"]),
        "intention": dict(intention),
    }


def report_json(report: Mapping) -> str:
    return json.dumps(report, indent=2) + "\n"


def report_markdown(report: Mapping) -> str:
    sess = report["session"]
    case = report["case"]
    title = case["name"] or case["id"]
    lines = [
        f"# Assessment report: {title}",
        "",
        f"- Session: `{sess['id']}`",
        f"- Rulebook: `{sess['rulebook']['id']}` version `{sess['rulebook']['version']}`",
        f"- Created: {sess['created']}",
        f"- Finalized: {sess['updated']}",
    ]
    if case["description"]:
        lines += ["", case["description"]]
    lines += ["", verdict_markdown(report["verdict"]).rstrip("\n")]

    lines += ["", "## Evidence inventory", ""]
    if report["evidence"]:
        lines += ["| Id | Channel | Source | Polarity | Purposes | Provenance |",
                  "|----|---------|--------|----------|----------|------------|"]
        for item in report["evidence"]:
            purposes = ", ".join(item["purposes"]) or "—"
            lines.append(
                f"| `{item['id']}` | {item['channel']} | {item['source']} "
                f"| {item['polarity']} | {purposes} "
                f"| {_md_cell(item['provenance']) or '—'} |")
    else:
        lines.append("No evidence on file.")

    res = report["intention"]
    lines += ["", "## Intention resolution", ""]
    status = "established" if res["established"] else "not established"
    prevailing = (f" (prevailing channel: {res['prevailing_channel']})"
                  if res["prevailing_channel"] else "")
    lines.append(f"Intention {status}{prevailing}.")
    for key in ("direct", "indirect"):
        finding = res[key]
        supporting = ", ".join(f"`{i}`" for i in finding["supporting"]) or "none"
        contradicting = ", ".join(f"`{i}`" for i in finding["contradicting"]) or "none"
        lines.append(f"- {key}: "
                     f"{'established' if finding['established'] else 'not established'}; "
                     f"supporting: {supporting}; contradicting: {contradicting}")
    return "\n".join(lines) + "\n"
