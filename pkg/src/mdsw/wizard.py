"""Terminal wizard: the interactive question loop without HTTP.

Runs the same session-style walk as the service against an in-memory case,
so nothing touches disk; interrupting it leaves no files behind.
"""

from __future__ import annotations

import sys
from typing import Callable, TextIO

from .case import AssessmentCase
from .engine import Verdict, derived_preview, evaluate, walk_interaction
from .report import verdict_markdown, verdict_to_dict
from .rulepack import Rulebook

_YES = {"y", "yes"}
_NO = {"n", "no"}


class WizardAborted(Exception):
    """Input ended before the walk reached a verdict."""


def _ask(prompt: str, stdin: TextIO, echo: Callable[[str], None]) -> bool:
    while True:
        echo(prompt)
        line = stdin.readline()
        if not line:
            raise WizardAborted("input ended before the assessment finished")
        answer = line.strip().lower()
        if answer in _YES:
            return True
        if answer in _NO:
            return False
        echo("please answer yes or no")


def run_wizard(rb: Rulebook, stdin: TextIO | None = None,
               echo: Callable[[str], None] | None = None) -> Verdict:
    stdin = sys.stdin if stdin is None else stdin
    echo = (lambda s: print(s)) if echo is None else echo

    case = AssessmentCase(id=f"wizard-{rb.id}")
    echo(f"Assessment under rulebook '{rb.id}' (version {rb.version}). "
         f"Answer yes or no.")
    while True:
        state = walk_interaction(case, rb)
        if state.complete:
            break
        node = state.blocked
        assert node is not None
        echo("")
        echo(f"[{node.id}] {node.prompt}")
        echo(f"    cite: {node.citation}")
        if node.kind is not None and node.kind.is_derived:
            computed = derived_preview(node, case)
            shown = {True: "yes", False: "no", None: "undecided"}[computed]
            echo(f"    derived answer from evidence: {shown} "
                 f"(your answer is recorded as an override)")
        case.answers[node.id] = _ask("  answer (yes/no): ", stdin, echo)

    verdict = evaluate(case, rb)
    echo("")
    echo(verdict_markdown(verdict_to_dict(verdict)).rstrip("\n"))
    return verdict
