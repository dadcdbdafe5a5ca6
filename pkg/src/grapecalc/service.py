"""HTTP session service for the interactive slip explorer.

The service is a thin wrapper over the core modules: every response is
re-derivable from library calls and no computation happens here beyond
bookkeeping a per-session move stack.  All numbers cross the wire as
decimal strings so clients never touch anything but exact integers.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from . import slips
from .data import list_clusters, load_named_cluster
from .hexgrapes import GrapeCluster, HexCell, InvalidClusterError


class ClusterIn(BaseModel):
    name: str | None = None
    text: str | None = None


class GrapeOut(BaseModel):
    label: str
    x: str
    y: str


class MoveBody(BaseModel):
    x: str
    y: str
    dir: str
    n: str


class MoveOut(BaseModel):
    x: str
    y: str
    dir: str
    n: str
    target_x: str
    target_y: str


class ClusterOut(BaseModel):
    grapes: list[GrapeOut]
    serialization: str


class SessionOut(BaseModel):
    session: str
    cluster: ClusterOut
    depth: str


class InvariantsOut(BaseModel):
    dim: str
    rank: str
    determinant: str
    signature: str
    even: bool
    definiteness: str


class GoalOut(BaseModel):
    target: str
    reached: bool


class HintOut(BaseModel):
    move: MoveOut | None
    reason: str


@dataclass
class _Session:
    stack: list[GrapeCluster]
    moves: list[slips.SlipMove] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def current(self) -> GrapeCluster:
        return self.stack[-1]


def _cluster_out(cluster: GrapeCluster) -> ClusterOut:
    grapes = [GrapeOut(label=cluster.label_of(c), x=str(c.x), y=str(c.y))
              for c in cluster.ordered_cells()]
    return ClusterOut(grapes=grapes, serialization=cluster.to_text())


def _move_out(mv: slips.SlipMove) -> MoveOut:
    from .constants import DIRECTION_NAMES
    t = mv.target
    return MoveOut(x=str(mv.start.x), y=str(mv.start.y),
                   dir=DIRECTION_NAMES[mv.direction], n=str(mv.length),
                   target_x=str(t.x), target_y=str(t.y))


def _parse_move(body: MoveBody) -> slips.SlipMove:
    from .constants import DIRECTION_BY_NAME
    if body.dir not in DIRECTION_BY_NAME:
        raise HTTPException(status_code=422, detail=f"unknown direction {body.dir!r}")
    try:
        return slips.SlipMove(HexCell(int(body.x), int(body.y)),
                              DIRECTION_BY_NAME[body.dir], int(body.n))
    except ValueError as e:
        raise HTTPException(status_code=422, detail=str(e))


def create_app(data_dir=None) -> FastAPI:
    app = FastAPI(title="grapecalc session service", version="1")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, _Session] = {}
    registry_lock = threading.Lock()

    def get_session(sid: str) -> _Session:
        with registry_lock:
            s = sessions.get(sid)
        if s is None:
            raise HTTPException(status_code=404, detail=f"no session {sid}")
        return s

    def load_target(name: str) -> GrapeCluster:
        try:
            return load_named_cluster(name, data_dir)
        except FileNotFoundError:
            raise HTTPException(status_code=404, detail=f"no cluster named {name!r}")

    @app.get("/v1/clusters")
    def clusters() -> dict:
        return {"clusters": list_clusters(data_dir)}

    @app.get("/v1/cluster/{name}")
    def cluster(name: str) -> ClusterOut:
        return _cluster_out(load_target(name))

    @app.post("/v1/session")
    def create_session(body: ClusterIn) -> SessionOut:
        if body.name:
            start = load_target(body.name)
        elif body.text:
            try:
                start = GrapeCluster.from_text(body.text)
            except InvalidClusterError as e:
                raise HTTPException(status_code=422, detail=str(e))
        else:
            raise HTTPException(status_code=422,
                                detail="session body needs `name` or `text`")
        sid = uuid.uuid4().hex[:12]
        with registry_lock:
            sessions[sid] = _Session(stack=[start])
        return SessionOut(session=sid, cluster=_cluster_out(start), depth="0")

    @app.get("/v1/session/{sid}/moves")
    def legal_moves(sid: str) -> dict:
        s = get_session(sid)
        with s.lock:
            moves = slips.enumerate_moves(s.current)
        return {"moves": [_move_out(m).model_dump() for m in moves]}

    @app.post("/v1/session/{sid}/apply")
    def apply_move(sid: str, body: MoveBody) -> SessionOut:
        s = get_session(sid)
        mv = _parse_move(body)
        with s.lock:
            try:
                ok, reason = slips.is_legal(s.current, mv)
            except slips.NoGrapeError as e:
                raise HTTPException(status_code=409, detail=str(e))
            if not ok:
                raise HTTPException(status_code=409, detail=reason)
            nxt = slips.apply(s.current, mv)
            s.stack.append(nxt)
            s.moves.append(mv)
            return SessionOut(session=sid, cluster=_cluster_out(nxt),
                              depth=str(len(s.moves)))

    @app.post("/v1/session/{sid}/undo")
    def undo(sid: str) -> SessionOut:
        s = get_session(sid)
        with s.lock:
            if len(s.stack) == 1:
                raise HTTPException(status_code=409, detail="nothing to undo")
            s.stack.pop()
            s.moves.pop()
            return SessionOut(session=sid, cluster=_cluster_out(s.current),
                              depth=str(len(s.moves)))

    @app.get("/v1/session/{sid}/invariants")
    def invariants(sid: str) -> InvariantsOut:
        s = get_session(sid)
        with s.lock:
            bundle = s.current.linking_form().invariants()
        return InvariantsOut(dim=str(bundle.dim), rank=str(bundle.rank),
                             determinant=str(bundle.determinant),
                             signature=str(bundle.signature),
                             even=bundle.even, definiteness=bundle.definiteness)

    @app.get("/v1/session/{sid}/goal")
    def goal(sid: str, target: str = Query(...)) -> GoalOut:
        s = get_session(sid)
        goal_cluster = load_target(target)
        with s.lock:
            reached = (slips.canonical_key(s.current)
                       == slips.canonical_key(goal_cluster))
        return GoalOut(target=target, reached=reached)

    @app.get("/v1/session/{sid}/hint")
    def hint(sid: str, target: str = Query(...), depth: int = Query(4)) -> HintOut:
        s = get_session(sid)
        goal_cluster = load_target(target)
        depth = max(0, min(depth, 7))
        with s.lock:
            trace = slips.search(s.current, goal_cluster, depth)
        if trace is None:
            return HintOut(move=None, reason=f"no hint within depth {depth}")
        if not trace.moves:
            return HintOut(move=None, reason="already at the goal")
        return HintOut(move=_move_out(trace.moves[0]),
                       reason=f"{len(trace)} moves remain")

    return app


def run(port: int = 8763, data_dir=None, host: str = "127.0.0.1") -> None:
    import uvicorn
    uvicorn.run(create_app(data_dir), host=host, port=port, log_level="warning")
