"""File-backed session persistence: one JSON document per session.

Writes go through a temp file in the same directory followed by an atomic
rename, so a crash mid-write never leaves a partially written session.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path


class UnknownSessionError(KeyError):
    def __init__(self, session_id: str):
        super().__init__(session_id)
        self.session_id = session_id

    def __str__(self) -> str:
        return f"unknown session: {self.session_id!r}"


def _valid_id(session_id: str) -> bool:
    # ids are lowercase hex; this also keeps path traversal out of the store
    return (bool(session_id) and len(session_id) <= 64
            and all(c in "0123456789abcdef" for c in session_id))


class SessionStore:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def _path(self, session_id: str) -> Path:
        if not _valid_id(session_id):
            raise UnknownSessionError(session_id)
        return self.root / f"{session_id}.json"

    def save(self, doc: dict) -> None:
        path = self._path(doc["id"])
        payload = json.dumps(doc, indent=2) + "\n"
        fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(payload)
                fh.flush()
                os.fsync(fh.fileno())
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except FileNotFoundError:
                pass
            raise

    def load(self, session_id: str) -> dict:
        path = self._path(session_id)
        try:
            return json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError:
            raise UnknownSessionError(session_id) from None

    def exists(self, session_id: str) -> bool:
        return _valid_id(session_id) and self._path(session_id).exists()

    def list_ids(self) -> list[str]:
        return sorted(p.stem for p in self.root.glob("*.json")
                      if _valid_id(p.stem))
