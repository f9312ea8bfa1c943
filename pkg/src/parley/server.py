"""HTTP wire API over the conversation service.

The JSON shapes here are the contract the browser client builds
against: a turn's payload is the full turn log, so a debugging client
can show the pipeline without a second channel.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .engine import Engine
from .service import ConversationService, ServiceError

DEFAULT_STATIC_DIR = Path(__file__).resolve().parent.parent.parent / "frontend" / "dist"


class CreateSessionBody(BaseModel):
    user_id: str | None = None
    seed: int | None = None
    variant: str | None = None


class TurnBody(BaseModel):
    utterance: str


class EndBody(BaseModel):
    rating: int | None = None


def create_app(
    service: ConversationService | None = None,
    data_dir: str | None = None,
    static_dir: str | Path | None = None,
) -> FastAPI:
    svc = service if service is not None else ConversationService(
        Engine(), data_dir=data_dir
    )
    app = FastAPI(title="parley", docs_url="/api/docs", openapi_url="/api/openapi.json")
    app.state.service = svc

    def _guard(fn, *args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ServiceError as err:
            raise HTTPException(status_code=err.status, detail=str(err)) from err

    @app.get("/api/health")
    def health() -> dict:
        return {"status": "ok", "open_sessions": len(svc.open_sessions())}

    @app.post("/api/sessions")
    def create_session(body: CreateSessionBody) -> dict:
        return _guard(
            svc.create_session,
            user_id=body.user_id,
            seed=body.seed,
            variant=body.variant,
        )

    @app.get("/api/sessions/{session_id}")
    def session_state(session_id: str) -> dict:
        return _guard(svc.session_state, session_id)

    @app.post("/api/sessions/{session_id}/turns")
    def post_turn(session_id: str, body: TurnBody) -> dict:
        return _guard(svc.post_turn, session_id, body.utterance)

    @app.post("/api/sessions/{session_id}/end")
    def end_session(session_id: str, body: EndBody) -> dict:
        return _guard(svc.end_session, session_id, body.rating)

    static = Path(static_dir) if static_dir is not None else DEFAULT_STATIC_DIR
    if static.is_dir():
        app.mount("/", StaticFiles(directory=static, html=True), name="static")

    return app
