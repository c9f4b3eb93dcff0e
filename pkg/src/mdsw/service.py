"""HTTP+JSON API for interactive assessment sessions.

All request and response bodies are JSON; errors are rendered uniformly as
{"code": ..., "message": ...}. The service holds no state outside the
session store directory, so restarting it loses nothing.
"""

from __future__ import annotations

from pathlib import Path
from typing import Mapping

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from .report import report_json
from .sessions import SessionFault, SessionManager, UnknownSessionError
from .store import SessionStore


class _BadRequest(SessionFault):
    code = "invalid-request"
    http_status = 400


def _require(body: Mapping, key: str, kind: type, what: str):
    if not isinstance(body, Mapping) or key not in body:
        raise _BadRequest(f"request body must carry '{key}' ({what})")
    value = body[key]
    if not isinstance(value, kind):
        raise _BadRequest(f"'{key}' must be {what}")
    return value


def create_app(data_dir: str | Path, manager: SessionManager | None = None) -> FastAPI:
    if manager is None:
        manager = SessionManager(SessionStore(data_dir))
    app = FastAPI(title="mdsw assessment service", docs_url=None, redoc_url=None)
    app.state.manager = manager
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )

    @app.exception_handler(SessionFault)
    async def _fault(_request: Request, exc: SessionFault) -> JSONResponse:
        return JSONResponse(status_code=exc.http_status,
                            content={"code": exc.code, "message": exc.message})

    @app.exception_handler(UnknownSessionError)
    async def _unknown(_request: Request, exc: UnknownSessionError) -> JSONResponse:
        return JSONResponse(status_code=404,
                            content={"code": "unknown-session", "message": str(exc)})

    @app.exception_handler(RequestValidationError)
    async def _invalid(_request: Request, exc: RequestValidationError) -> JSONResponse:
        return JSONResponse(status_code=400,
                            content={"code": "invalid-request", "message": str(exc)})

    @app.get("/rulebooks")
    def list_rulebooks() -> dict:
        return {"rulebooks": manager.rulebook_summaries()}

    @app.post("/sessions", status_code=201)
    def create_session(body: dict) -> dict:
        rulebook_id = _require(body, "rulebook", str, "a rulebook id string")
        seed_case = body.get("case")
        if seed_case is not None and not isinstance(seed_case, Mapping):
            raise _BadRequest("'case' must be a case document object")
        session = manager.create(rulebook_id, seed_case)
        return {"session": manager.summary(session),
                "next": manager.next_payload(session)}

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str) -> dict:
        return manager.full_state(manager.get(session_id))

    @app.post("/sessions/{session_id}/answers")
    def submit_answer(session_id: str, body: dict) -> dict:
        node = _require(body, "node", str, "a node id string")
        answer = _require(body, "answer", bool, "a boolean")
        session = manager.submit_answer(session_id, node, answer)
        return {"session": manager.summary(session),
                "next": manager.next_payload(session)}

    @app.post("/sessions/{session_id}/evidence")
    def attach_evidence(session_id: str, body: dict) -> dict:
        session = manager.attach_evidence(session_id, body)
        return {"session": manager.summary(session),
                "intention": manager.intention(session),
                "next": manager.next_payload(session)}

    @app.get("/sessions/{session_id}/verdict")
    def get_verdict(session_id: str) -> dict:
        return manager.verdict(session_id)

    @app.get("/sessions/{session_id}/report")
    def get_report(session_id: str, format: str = "json"):
        if format not in ("json", "md"):
            raise _BadRequest("format must be 'json' or 'md'")
        rendered = manager.report(session_id, format)
        if format == "md":
            return PlainTextResponse(rendered, media_type="text/markdown")
        return PlainTextResponse(report_json(rendered), media_type="application/json")

    return app
