"""HTTP session API for the puzzle engine.

Turn-based JSON over HTTP: create a session, post moves, undo, poll
renders.  Sessions live in an in-memory store with per-session locks and
an optional snapshot file; identical request sequences from a fixed seed
produce identical responses.
"""

from __future__ import annotations

import json
import os
import threading
from contextlib import contextmanager
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import engine
from .core import convention_from_env
from .engine import EngineError, GameMode, Session


class ApiError(Exception):
    def __init__(self, code: str, message: str, status: int):
        super().__init__(message)
        self.code = code
        self.message = message
        self.status = status


_STATUS = {
    "BAD_REQUEST": 400,
    "NOT_FOUND": 404,
    "ILLEGAL_MOVE": 409,
    "INVALID_AMOUNT": 422,
    "INVALID_INDEX": 422,
    "NOTHING_TO_UNDO": 409,
}


def _from_engine(err: EngineError) -> ApiError:
    return ApiError(err.code, str(err), _STATUS.get(err.code, 400))


class SessionStore:
    """Thread-safe map of session id to session, with JSON snapshots.

    Per-session locks serialize moves on one session while letting
    different sessions proceed concurrently; the store lock makes a
    snapshot a consistent point-in-time view.
    """

    def __init__(self, snapshot_path: Optional[str] = None):
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._mutex = threading.Lock()
        self.snapshot_path = snapshot_path

    def put(self, session: Session) -> None:
        with self._mutex:
            self._sessions[session.id] = session
            self._locks.setdefault(session.id, threading.Lock())

    @contextmanager
    def locked(self, sid: str):
        with self._mutex:
            lock = self._locks.get(sid)
        if lock is None:
            raise ApiError("NOT_FOUND", f"no session {sid}", 404)
        with lock:
            yield self._sessions[sid]

    def get(self, sid: str) -> Session:
        with self._mutex:
            session = self._sessions.get(sid)
        if session is None:
            raise ApiError("NOT_FOUND", f"no session {sid}", 404)
        return session

    def snapshot(self) -> None:
        if not self.snapshot_path:
            return
        with self._mutex:
            doc = [engine.session_to_dict(s) for s in self._sessions.values()]
        Path(self.snapshot_path).write_text(json.dumps(doc))

    def restore(self) -> None:
        if not self.snapshot_path or not Path(self.snapshot_path).exists():
            return
        doc = json.loads(Path(self.snapshot_path).read_text())
        if not isinstance(doc, list):
            raise engine.ParseError("snapshot file must hold a session array")
        for entry in doc:
            self.put(engine.session_from_dict(entry))


def _render_dict(board) -> dict:
    grid = engine.render_complex(board)
    return {
        "rows": board.rows,
        "cols": board.cols,
        "intensity": [[float(x) for x in row] for row in grid.intensity],
        "angle": [[float(x) for x in row] for row in grid.angle],
    }


def _board_response(session: Session) -> dict:
    return {
        "board": engine.board_to_dict(session.board),
        "renderGrid": _render_dict(session.board),
        "solved": engine.is_solved(session.board),
    }


def create_app(store: Optional[SessionStore] = None) -> FastAPI:
    store = store or SessionStore()
    app = FastAPI(title="gcshift service")
    app.state.store = store
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"])

    @app.exception_handler(ApiError)
    async def _api_error(_req: Request, err: ApiError):
        return JSONResponse(status_code=err.status,
                            content={"code": err.code, "message": err.message})

    async def _body(request: Request) -> dict:
        try:
            doc = await request.json()
        except Exception:
            raise ApiError("BAD_REQUEST", "request body must be JSON", 400)
        if not isinstance(doc, dict):
            raise ApiError("BAD_REQUEST", "request body must be an object", 400)
        return doc

    @app.post("/sessions")
    async def create_session(request: Request):
        doc = await _body(request)
        try:
            mode = GameMode(doc.get("mode", "gcs"))
            size = int(doc.get("size", 3))
            seed = doc.get("seed")
            seed = int(seed) if seed is not None else None
            moves = int(doc.get("moves", 20))
            tolerance = doc.get("tolerance")
            tolerance = float(tolerance) if tolerance is not None else None
        except (ValueError, TypeError) as e:
            raise ApiError("BAD_REQUEST", f"bad request field: {e}", 400)
        try:
            session = engine.start_session(mode, size, size, seed=seed, moves=moves,
                                           tolerance=tolerance, conv=convention_from_env())
        except EngineError as e:
            raise _from_engine(e)
        store.put(session)
        return {"id": session.id, "seed": session.seed, **_board_response(session)}

    @app.get("/sessions/{sid}")
    async def get_state(sid: str):
        session = store.get(sid)
        return {
            "board": engine.board_to_dict(session.board),
            "history": [engine.move_to_dict(m) for m in session.history],
            "solved": engine.is_solved(session.board),
        }

    @app.get("/sessions/{sid}/render")
    async def get_render(sid: str):
        session = store.get(sid)
        return {"renderGrid": _render_dict(session.board)}

    @app.post("/sessions/{sid}/moves")
    async def post_move(sid: str, request: Request):
        doc = await _body(request)
        try:
            move = engine.move_from_dict(doc)
        except EngineError as e:
            raise _from_engine(e)
        with store.locked(sid) as session:
            try:
                session = engine.session_apply(session, move)
            except EngineError as e:
                raise _from_engine(e)
            store.put(session)
        return _board_response(session)

    @app.post("/sessions/{sid}/undo")
    async def post_undo(sid: str):
        with store.locked(sid) as session:
            try:
                session = engine.undo(session)
            except EngineError as e:
                raise _from_engine(e)
            store.put(session)
        return _board_response(session)

    @app.post("/snapshot")
    async def snapshot():
        store.snapshot()
        return {"ok": True}

    return app


def main() -> None:
    import argparse

    import uvicorn

    parser = argparse.ArgumentParser(prog="gcshift-service")
    parser.add_argument("--addr", default=os.environ.get("GCS_ADDR", "127.0.0.1:8080"))
    parser.add_argument("--snapshot", default=None, help="snapshot file path")
    args = parser.parse_args()
    store = SessionStore(snapshot_path=args.snapshot)
    store.restore()
    host, _, port = args.addr.rpartition(":")
    uvicorn.run(create_app(store), host=host or "127.0.0.1", port=int(port))


if __name__ == "__main__":
    main()
