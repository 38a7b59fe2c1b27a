"""JSON-over-HTTP session service for playing the robber side.

The server owns no game logic: it parses requests, drives a PursuitGame
per session, and serializes its state.  Sessions live in memory behind
per-session try-locks (turn-based games never queue; a concurrent
request on the same session gets 409) and evaporate after an idle TTL.
"""

from __future__ import annotations

import copy
import itertools
import json
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .errors import BudgetExceededError, DomainError, StrategyViolationError
from .families import FamilySpec, make_family
from .graphs import Graph, graph_to_json, parse_graph
from .oracle import SolveResult, solve
from .pursuit import Phase, PursuitGame
from .recognition import is_member


class CreateSession(BaseModel):
    graph: dict
    cops: int = 2
    u0: int | None = None
    hints: bool | None = None
    override: bool = False


class RobberMove(BaseModel):
    to: int


@dataclass
class _Session:
    id: str
    game: PursuitGame
    hints_enabled: bool
    solve_result: SolveResult | None
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_used: float = field(default_factory=time.monotonic)
    recorded: bool = False


def _protocol_error(status: int, message: str, **extra):
    return HTTPException(status_code=status, detail={"error": message, **extra})


def _parse_graph_field(spec: dict) -> Graph:
    if "edge_list" in spec:
        return parse_graph(spec["edge_list"])
    if "family" in spec:
        return make_family(FamilySpec.from_json(spec["family"]))
    raise DomainError('graph needs "edge_list" or "family"')


def create_app(
    hints_default: bool = False,
    record_dir: str | Path | None = None,
    ttl: float = 3600.0,
) -> FastAPI:
    app = FastAPI(title="copchase", docs_url=None, redoc_url=None)
    sessions: dict[str, _Session] = {}
    store_lock = threading.Lock()
    ids = itertools.count(1)
    record_path = Path(record_dir) if record_dir is not None else None
    # exposed for tests and operational introspection
    app.state.sessions = sessions

    def evict_idle() -> None:
        now = time.monotonic()
        with store_lock:
            for sid in [s for s, sess in sessions.items() if now - sess.last_used > ttl]:
                del sessions[sid]

    def get_session(sid: str) -> _Session:
        evict_idle()
        with store_lock:
            sess = sessions.get(sid)
        if sess is None:
            raise _protocol_error(404, f"no session {sid!r}")
        sess.last_used = time.monotonic()
        return sess

    def cop_names(game: PursuitGame) -> list[str]:
        return ["c1", "c2"] if game.cop_count == 2 else ["c0", "c1", "c2"]

    def hints_for(sess: _Session) -> dict[str, int | None] | None:
        game = sess.game
        if (
            not sess.hints_enabled
            or sess.solve_result is None
            or game.phase not in (Phase.ROBBER_PLACE, Phase.ROBBER_MOVE)
        ):
            return None
        survival = sess.solve_result.survival_map(
            tuple(game.cops), game.legal_robber_moves()
        )
        return {str(v): val for v, val in survival.items()}

    def public_state(sess: _Session) -> dict:
        game = sess.game
        bound = 2 * game.graph.n if game.cop_count == 2 else game.graph.n
        return {
            "graph": graph_to_json(game.graph),
            "cops": list(game.cops),
            "cop_names": cop_names(game),
            "robber": game.robber,
            "u0": game.transcript.u0,
            "u1": game.u1,
            "phase": game.phase.value,
            "round": game.round,
            "captured": game.phase is Phase.CAPTURED,
            "captured_at": game.transcript.captured_at,
            "bound": bound,
            "legal_moves": game.legal_robber_moves(),
            "hints": hints_for(sess),
        }

    def record(sess: _Session) -> None:
        if record_path is None or sess.recorded or not sess.game.transcript.finished:
            return
        record_path.mkdir(parents=True, exist_ok=True)
        out = record_path / f"{sess.id}.json"
        out.write_text(json.dumps(sess.game.transcript.to_json(), sort_keys=True) + "\n")
        sess.recorded = True

    @app.post("/session")
    def create_session(body: CreateSession):
        evict_idle()
        try:
            g = _parse_graph_field(body.graph)
        except DomainError as e:
            raise _protocol_error(422, str(e)) from None
        if body.cops not in (2, 3):
            raise _protocol_error(422, f"cops must be 2 or 3, got {body.cops}")
        report = is_member(g)
        if not report.member and not body.override:
            raise _protocol_error(
                422,
                "graph is outside the class; pass override to play anyway",
                claw=list(report.claw) if report.claw else None,
                even_hole=list(report.even_hole) if report.even_hole else None,
            )
        u0 = 0 if body.u0 is None else body.u0
        try:
            game = PursuitGame(g, body.cops, u0)
        except DomainError as e:
            raise _protocol_error(422, str(e)) from None
        hints_enabled = hints_default if body.hints is None else body.hints
        solve_result = None
        if hints_enabled:
            try:
                solve_result = solve(g, body.cops)
            except (BudgetExceededError, DomainError):
                solve_result = None
        sid = f"s{next(ids)}"
        sess = _Session(sid, game, hints_enabled, solve_result)
        with store_lock:
            sessions[sid] = sess
        return {"id": sid, "state": public_state(sess)}

    @app.post("/session/{sid}/robber")
    def robber_move(sid: str, body: RobberMove):
        sess = get_session(sid)
        if not sess.lock.acquire(blocking=False):
            raise _protocol_error(409, "session busy; one request at a time")
        try:
            game = sess.game
            if game.phase is Phase.CAPTURED:
                raise _protocol_error(422, "session finished; the robber is captured")
            snapshot = copy.deepcopy(game)
            try:
                if game.phase is Phase.ROBBER_PLACE:
                    game.place_robber(body.to)
                else:
                    game.robber_turn(body.to)
                before = len(game.transcript.moves)
                if game.phase is Phase.COPS_MOVE:
                    game.cop_turn()
                cop_moves = [m.to_json() for m in game.transcript.moves[before:]]
            except (DomainError, StrategyViolationError) as e:
                sess.game = snapshot
                raise _protocol_error(422, str(e)) from None
            captured = game.phase is Phase.CAPTURED
            if captured:
                record(sess)
            return {
                "state": public_state(sess),
                "cop_moves": cop_moves,
                "captured": captured,
                "round": game.transcript.captured_at if captured else game.round,
                "hints": hints_for(sess),
            }
        finally:
            sess.lock.release()

    @app.get("/session/{sid}")
    def get_state(sid: str):
        return public_state(get_session(sid))

    @app.get("/session/{sid}/transcript")
    def get_transcript(sid: str):
        return get_session(sid).game.transcript.to_json()

    return app
