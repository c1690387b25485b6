"""HTTP/JSON session service for the domino game.

Sessions live in memory only; restarting the process forgets them.  The
store serializes operations per session id, so concurrent requests against
one session never interleave, while distinct sessions proceed in parallel.
"""

from __future__ import annotations

import threading
from collections import OrderedDict

from fastapi import Body, FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from . import domino
from .errors import (
    CellOccupied,
    GameOver,
    InvalidBoard,
    NotAdjacent,
    NotTileable,
    OffBoard,
)

DEFAULT_SESSION_CAP = 1024


class SessionStore:
    """Thread-safe, LRU-bounded map of session id -> (session, lock)."""

    def __init__(self, cap: int = DEFAULT_SESSION_CAP):
        self._cap = cap
        self._lock = threading.Lock()
        self._sessions: OrderedDict[str, tuple[domino.GameSession, threading.Lock]] = (
            OrderedDict()
        )

    def add(self, session: domino.GameSession) -> None:
        with self._lock:
            self._sessions[session.session_id] = (session, threading.Lock())
            self._sessions.move_to_end(session.session_id)
            while len(self._sessions) > self._cap:
                self._sessions.popitem(last=False)

    def get(self, session_id: str):
        with self._lock:
            entry = self._sessions.get(session_id)
            if entry is not None:
                self._sessions.move_to_end(session_id)
            return entry

    def delete(self, session_id: str) -> bool:
        with self._lock:
            return self._sessions.pop(session_id, None) is not None

    def __len__(self) -> int:
        with self._lock:
            return len(self._sessions)


def _error(status: int, code: str, detail: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": code, "detail": detail})


def _placement_json(p: domino.Placement) -> dict:
    return {"cells": [list(p.cells[0]), list(p.cells[1])]}


def _moves_json(moves) -> list[dict]:
    return [_placement_json(p) for p in moves]


def _session_json(s: domino.GameSession) -> dict:
    return {
        "session_id": s.session_id,
        "rows": s.board.rows,
        "cols": s.board.cols,
        "cells": [list(c) for c in sorted(s.board.cells)],
        "status": s.status.value,
        "bad_move_count": s.bad_move_count,
        "max_bad_moves": s.max_bad_moves,
        "placements": _moves_json(s.placements),
        "allowed_moves": _moves_json(domino._allowed_placements(s)),
    }


def _parse_cells(payload) -> tuple[tuple[int, int], tuple[int, int]] | None:
    cells = payload.get("cells") if isinstance(payload, dict) else None
    if (
        not isinstance(cells, list)
        or len(cells) != 2
        or any(
            not isinstance(c, list)
            or len(c) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in c)
            for c in cells
        )
    ):
        return None
    return (cells[0][0], cells[0][1]), (cells[1][0], cells[1][1])


def create_app(store: SessionStore | None = None) -> FastAPI:
    app = FastAPI(title="domino tiling service", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions = store if store is not None else SessionStore()

    @app.exception_handler(RequestValidationError)
    async def _malformed(request, exc):
        return _error(400, "malformed", "request body is not valid JSON of the expected shape")

    @app.post("/api/sessions", status_code=201)
    def create_session(payload: dict = Body(...)):
        board_rows = payload.get("board")
        max_bad = payload.get("max_bad_moves")
        if (
            not isinstance(board_rows, list)
            or not board_rows
            or not all(isinstance(r, str) for r in board_rows)
        ):
            return _error(400, "malformed", "'board' must be a non-empty list of row strings")
        if not isinstance(max_bad, int) or isinstance(max_bad, bool) or max_bad < 1:
            return _error(400, "malformed", "'max_bad_moves' must be an integer >= 1")
        try:
            board = domino.Board.from_rows(board_rows)
            session = domino.new_session(board, max_bad)
        except InvalidBoard as exc:
            return _error(422, "invalid_board", str(exc))
        except NotTileable as exc:
            return _error(422, "not_tileable", str(exc))
        sessions.add(session)
        return {
            "session_id": session.session_id,
            "rows": session.board.rows,
            "cols": session.board.cols,
            "cells": [list(c) for c in sorted(session.board.cells)],
            "tileable": True,
            "max_bad_moves": session.max_bad_moves,
            "allowed_moves": _moves_json(domino._allowed_placements(session)),
        }

    @app.post("/api/sessions/{session_id}/moves")
    def play_move(session_id: str, payload: dict = Body(...)):
        entry = sessions.get(session_id)
        if entry is None:
            return _error(404, "unknown_session", f"no session {session_id!r}")
        session, lock = entry
        cells = _parse_cells(payload)
        if cells is None:
            return _error(400, "malformed", "'cells' must be [[r1, c1], [r2, c2]] of integers")
        with lock:
            try:
                placement = domino.Placement(cells[0], cells[1])
                outcome = domino.apply_move(session, placement)
            except NotAdjacent as exc:
                return _error(400, "not_adjacent", str(exc))
            except OffBoard as exc:
                return _error(400, "off_board", str(exc))
            except CellOccupied as exc:
                return _error(400, "cell_occupied", str(exc))
            except GameOver as exc:
                return _error(409, "game_over", str(exc))
            return {
                "accepted": outcome.accepted,
                "reason": outcome.reason,
                "bad_move_count": outcome.bad_move_count,
                "max_bad_moves": outcome.max_bad_moves,
                "placements": _moves_json(outcome.placements),
                "allowed_moves": _moves_json(outcome.allowed_moves),
                "status": outcome.status.value,
            }

    @app.get("/api/sessions/{session_id}")
    def get_session(session_id: str):
        entry = sessions.get(session_id)
        if entry is None:
            return _error(404, "unknown_session", f"no session {session_id!r}")
        session, lock = entry
        with lock:
            return _session_json(session)

    @app.delete("/api/sessions/{session_id}")
    def delete_session(session_id: str):
        if not sessions.delete(session_id):
            return _error(404, "unknown_session", f"no session {session_id!r}")
        return Response(status_code=204)

    return app
