from __future__ import annotations

import json
from pathlib import Path

import pytest

from mdsw import MDR_PACK, MEDDEV_PACK, load_builtin, load_case

REPO_ROOT = Path(__file__).resolve().parents[1]
CORPUS_DIR = REPO_ROOT / "corpus"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"

CORPUS_IDS = [
    "c-329-16-prescription",
    "generic-office",
    "picture-archive",
    "prosthesis-assist",
    "remote-monitor",
    "empty-evidence",
]


@pytest.fixture(scope="session")
def mdr_rulebook():
    return load_builtin(MDR_PACK)


@pytest.fixture(scope="session")
def meddev_rulebook():
    return load_builtin(MEDDEV_PACK)


def corpus_case(case_id: str):
    return load_case(CORPUS_DIR / f"{case_id}.json")


def golden_verdict(case_id: str) -> dict:
    return json.loads((GOLDEN_DIR / "verdicts" / f"{case_id}.json").read_text())
