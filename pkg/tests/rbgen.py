"""Seeded random rulebook generator for round-trip and oracle properties.

Builds a random binary decision tree in preorder, so the first node is the
root, every node is reachable, and the result is acyclic by construction.
Prompts and citations exercise the string escapes and characters that are
meaningful to the grammar (quotes, backslashes, newlines, comment marks).
"""

from __future__ import annotations

import random

from mdsw import Node, Outcome, QuestionKind, Rulebook

_NASTY = ['"', "\\", "\n", "\t", "#", "->", "{", "}", "µ", "ß", " ", "yes", "no"]
_WORDS = ["monitors", "stores", "drives", "archive", "records", "alerts",
          "therapy", "telemetry", "wearable", "firmware"]
_KINDS = [QuestionKind.boolean(), QuestionKind.boolean(),
          QuestionKind.boolean(), QuestionKind.derived("intention"),
          QuestionKind.derived("purpose_fulfilled")]


def _text(rng: random.Random) -> str:
    bits = [rng.choice(_WORDS) for _ in range(rng.randint(1, 5))]
    for _ in range(rng.randint(0, 3)):
        bits.insert(rng.randrange(len(bits) + 1), rng.choice(_NASTY))
    return " ".join(bits)


def make_random_rulebook(rng: random.Random, max_questions: int = 7) -> Rulebook:
    nodes: list[Node] = []
    counter = {"q": 0, "v": 0}
    budget = rng.randint(1, max_questions)

    def build(force_question: bool) -> str:
        if force_question or (counter["q"] < budget and rng.random() < 0.6):
            counter["q"] += 1
            node_id = f"q{counter['q']}"
            index = len(nodes)
            nodes.append(None)  # reserve preorder slot
            yes = build(False)
            no = build(False)
            nodes[index] = Node(
                id=node_id,
                kind=rng.choice(_KINDS),
                prompt=_text(rng),
                citation=_text(rng),
                branches={"yes": yes, "no": no},
            )
            return node_id
        counter["v"] += 1
        node_id = f"v{counter['v']}"
        nodes.append(Node(
            id=node_id,
            outcome=rng.choice(list(Outcome)),
            reason=_text(rng),
            citation=_text(rng),
        ))
        return node_id

    build(True)
    return Rulebook(id=f"gen-{rng.randint(0, 10**6)}", version=_text(rng),
                    root=nodes[0].id, nodes=tuple(nodes))
