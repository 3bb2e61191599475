"""HTTP facade over the engine: player and profile management, live session
hosting, analytics endpoints, and durable state.

Durability model: every session command is appended to the event log (with
its idempotency key and payload) before the response is sent, and snapshots
of full session state are written periodically. A restarted service rebuilds
each session from its latest usable snapshot plus a deterministic replay of
the remaining logged commands, so recovery after a crash lands on the exact
pre-crash state and duplicate commands never score twice.
"""

import json
import logging
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from fastapi import Depends, FastAPI, Header, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import engine
from .analytics import monthly_progress
from .content import ChallengePack, load_pack
from .engine import GamePolicy, GameSession, HintKind, SessionStatus
from .errors import GameError, PackInvalid, ProfileIncomplete
from .events import (
    ANSWER_SUBMITTED,
    BADGE_AWARDED,
    HINT_PURCHASED,
    SESSION_COMPLETED,
    SESSION_STARTED,
    EventLog,
    SessionEvent,
    format_ts,
)
from .profile import SecurityProfile, set_answer

log = logging.getLogger(__name__)

SNAPSHOT_EVERY = 8


class NotFound(GameError):
    code = "not_found"


class Unauthorized(GameError):
    code = "unauthorized"


class Forbidden(GameError):
    code = "forbidden"


class CommandConflict(GameError):
    code = "conflict"


ERROR_STATUS = {
    "not_found": 404,
    "unauthorized": 401,
    "forbidden": 403,
    "conflict": 409,
    "pack_invalid": 400,
    "pool_too_small": 409,
    "profile_incomplete": 409,
    "session_not_active": 409,
    "session_not_completed": 409,
    "insufficient_points": 409,
    "no_hint_for_recognition": 409,
    "nothing_to_reveal": 409,
    "cue_already_shown": 409,
    "option_out_of_range": 422,
    "not_composable_from_bank": 422,
    "empty_answer": 422,
    "non_alphabetic": 422,
    "answer_too_long": 422,
    "unknown_question": 422,
    "too_many_questions": 422,
}


def _canonical(data: dict) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def _response_from_history(session: GameSession, index: int) -> dict:
    """Rebuild the exact response a logged command produced, from the event
    stream alone. Used to repopulate the idempotency cache after a restart."""
    events = session.events
    event = events[index]
    points_before = events[index - 1].points if index else 0
    if event.kind == ANSWER_SUBMITTED:
        badges = []
        j = index + 1
        while j < len(events) and events[j].kind == BADGE_AWARDED:
            badges.append(events[j].badge)
            j += 1
        if not event.correct:
            next_state = engine.NextState.SAME_CHALLENGE
        elif j < len(events) and events[j].kind == SESSION_COMPLETED:
            next_state = engine.NextState.SESSION_COMPLETE
        else:
            next_state = engine.NextState.NEXT_CHALLENGE
        return engine.Outcome(
            correct=event.correct,
            points_delta=event.points - points_before,
            points=event.points,
            badges_awarded=badges,
            next_state=next_state,
        ).to_dict()
    if event.kind == HINT_PURCHASED:
        slot = session.slots[event.slot - 1]
        if event.hint == HintKind.REVEAL_LETTER.value:
            position = sum(
                1
                for e in events[: index + 1]
                if e.kind == HINT_PURCHASED
                and e.slot == event.slot
                and e.hint == HintKind.REVEAL_LETTER.value
            )
            return engine.HintResult(
                hint=HintKind.REVEAL_LETTER,
                points_delta=event.points - points_before,
                points=event.points,
                position=position,
                letter=slot.answer[position - 1],
            ).to_dict()
        return engine.HintResult(
            hint=HintKind.VERBAL_CUE,
            points_delta=event.points - points_before,
            points=event.points,
            image=event.image,
            cue_text=slot.verbal_cues[event.image - 1],
        ).to_dict()
    raise PackInvalid(f"event {event.kind} is not a command")


@dataclass
class PlayerRecord:
    player_id: str
    display_name: str
    token: str
    created_at: str

    def to_dict(self) -> dict:
        return {
            "player": self.player_id,
            "name": self.display_name,
            "token": self.token,
            "created": self.created_at,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PlayerRecord":
        return cls(
            player_id=data["player"],
            display_name=data["name"],
            token=data["token"],
            created_at=data["created"],
        )


@dataclass
class SessionActor:
    """One live session plus everything that serializes access to it."""

    session: GameSession
    lock: threading.Lock = field(default_factory=threading.Lock)
    commands: dict[str, dict] = field(default_factory=dict)
    persisted_events: int = 0
    events_since_snapshot: int = 0


class GameService:
    """All service state and operations; the FastAPI layer is a thin shell."""

    def __init__(
        self,
        data_dir: str | Path,
        pack: ChallengePack,
        policy: GamePolicy | None = None,
    ):
        self.data_dir = Path(data_dir)
        self.pack = pack
        self.policy = policy or GamePolicy()
        self.players: dict[str, PlayerRecord] = {}
        self.profiles: dict[str, SecurityProfile] = {}
        self.actors: dict[str, SessionActor] = {}
        self.registry_lock = threading.Lock()
        for sub in ("players", "profiles", "sessions", "events"):
            (self.data_dir / sub).mkdir(parents=True, exist_ok=True)
        self.event_log = EventLog(self.data_dir / "events")
        self._recover()

    # -- persistence helpers --------------------------------------------

    def _write_json(self, path: Path, data: dict):
        tmp = path.with_suffix(".tmp")
        tmp.write_text(_canonical(data) + "\n", encoding="utf-8")
        tmp.replace(path)

    def _snapshot(self, actor: SessionActor):
        path = self.data_dir / "sessions" / f"{actor.session.session_id}.json"
        self._write_json(path, actor.session.to_dict())
        actor.events_since_snapshot = 0

    def _persist_new_events(self, actor: SessionActor):
        new = actor.session.events[actor.persisted_events :]
        self.event_log.append(new)
        actor.persisted_events = len(actor.session.events)
        actor.events_since_snapshot += len(new)
        if (
            actor.events_since_snapshot >= SNAPSHOT_EVERY
            or actor.session.status is SessionStatus.COMPLETED
        ):
            self._snapshot(actor)

    # -- recovery --------------------------------------------------------

    def _recover(self):
        for path in sorted((self.data_dir / "players").glob("*.json")):
            record = PlayerRecord.from_dict(json.loads(path.read_text(encoding="utf-8")))
            self.players[record.player_id] = record
        for path in sorted((self.data_dir / "profiles").glob("*.json")):
            profile = SecurityProfile.from_dict(json.loads(path.read_text(encoding="utf-8")))
            self.profiles[profile.player_id] = profile

        logged: dict[str, list[SessionEvent]] = {}
        for event in self.event_log.read_all():
            logged.setdefault(event.session_id, []).append(event)

        for session_id, session_events in logged.items():
            try:
                actor = self._rebuild_session(session_id, session_events)
            except Exception:
                log.exception("could not recover session %s", session_id)
                continue
            self.actors[session_id] = actor

    def _rebuild_session(
        self, session_id: str, logged: list[SessionEvent]
    ) -> SessionActor:
        session = None
        snapshot_path = self.data_dir / "sessions" / f"{session_id}.json"
        if snapshot_path.exists():
            candidate = GameSession.from_dict(
                json.loads(snapshot_path.read_text(encoding="utf-8"))
            )
            # A snapshot ahead of the log means the log is the shorter truth
            # (e.g. restored from a log backup); fall back to a full replay.
            if len(candidate.events) <= len(logged):
                session = candidate
        if session is None:
            start = logged[0]
            if start.kind != SESSION_STARTED:
                raise PackInvalid(f"log for {session_id} does not begin with a start event")
            profile = self.profiles.get(start.player_id)
            if profile is None:
                raise ProfileIncomplete(f"no profile on disk for {start.player_id}")
            session = engine.start_session(
                player_id=start.player_id,
                pack=self.pack,
                profile=profile,
                policy=self.policy,
                seed=start.seed,
                session_id=session_id,
                at=start.ts,
            )

        actor = SessionActor(session=session)
        pointer = len(session.events)
        while pointer < len(logged):
            event = logged[pointer]
            self._apply_command_event(session, event)
            pointer = len(session.events)
        actor.persisted_events = len(session.events)
        for index, event in enumerate(session.events):
            if event.command_id:
                actor.commands[event.command_id] = {
                    "payload": _canonical(event.payload or {}),
                    "response": _response_from_history(session, index),
                }
        return actor

    @staticmethod
    def _apply_command_event(session: GameSession, event: SessionEvent) -> dict:
        if event.kind == ANSWER_SUBMITTED:
            outcome = engine.submit_answer(
                session,
                event.payload["submission"],
                at=event.ts,
                command_id=event.command_id,
            )
            return outcome.to_dict()
        if event.kind == HINT_PURCHASED:
            result = engine.purchase_hint(
                session,
                HintKind(event.hint),
                image=event.image,
                at=event.ts,
                command_id=event.command_id,
            )
            return result.to_dict()
        raise PackInvalid(f"unexpected {event.kind} event during replay")

    # -- players and profiles --------------------------------------------

    def create_player(self, display_name: str) -> PlayerRecord:
        with self.registry_lock:
            player_id = f"player-{uuid.uuid4().hex[:10]}"
            record = PlayerRecord(
                player_id=player_id,
                display_name=display_name,
                token=uuid.uuid4().hex,
                created_at=format_ts(datetime.now(timezone.utc)),
            )
            self.players[player_id] = record
            self._write_json(self.data_dir / "players" / f"{player_id}.json", record.to_dict())
            return record

    def player_by_token(self, token: str) -> PlayerRecord:
        for record in self.players.values():
            if record.token == token:
                return record
        raise Unauthorized("unknown token")

    def get_player(self, player_id: str) -> PlayerRecord:
        record = self.players.get(player_id)
        if record is None:
            raise NotFound(f"no player {player_id}")
        return record

    def put_profile(self, player_id: str, entries: list[dict]) -> SecurityProfile:
        self.get_player(player_id)
        with self.registry_lock:
            for actor in self.actors.values():
                if (
                    actor.session.player_id == player_id
                    and actor.session.status is SessionStatus.ACTIVE
                ):
                    raise CommandConflict(
                        "profile cannot change while a session is active"
                    )
            question_ids = [entry["question_id"] for entry in entries]
            if len(set(question_ids)) != len(question_ids):
                raise ValueError("each entry must configure a different question")
            profile = SecurityProfile(player_id=player_id)
            for entry in entries:
                set_answer(
                    profile,
                    self.pack.questions,
                    entry["question_id"],
                    entry["answer"],
                    entry["images"],
                    entry["cues"],
                )
            self.profiles[player_id] = profile
            self._write_json(
                self.data_dir / "profiles" / f"{player_id}.json", profile.to_dict()
            )
            return profile

    # -- sessions ----------------------------------------------------------

    def start_session(self, player_id: str, seed: int | None = None) -> GameSession:
        self.get_player(player_id)
        profile = self.profiles.get(player_id)
        if profile is None or not profile.complete:
            raise ProfileIncomplete("configure 3 security questions first")
        with self.registry_lock:
            session = engine.start_session(
                player_id=player_id,
                pack=self.pack,
                profile=profile,
                policy=self.policy,
                seed=seed,
                at=datetime.now(timezone.utc),
            )
            actor = SessionActor(session=session)
            self.actors[session.session_id] = actor
            with actor.lock:
                self._snapshot(actor)
                self._persist_new_events(actor)
            return session

    def _actor(self, session_id: str) -> SessionActor:
        actor = self.actors.get(session_id)
        if actor is None:
            raise NotFound(f"no session {session_id}")
        return actor

    def session_view(self, session_id: str) -> dict:
        actor = self._actor(session_id)
        with actor.lock:
            view = engine.current_challenge(actor.session)
            return {
                "challenge": view.to_dict(),
                "points": actor.session.points,
                "badges": list(actor.session.badges),
                "session": session_id,
                "status": actor.session.status.value,
            }

    def _run_command(self, actor: SessionActor, command_id: str, payload: dict, apply) -> dict:
        payload_key = _canonical(payload)
        cached = actor.commands.get(command_id)
        if cached is not None:
            if cached["payload"] != payload_key:
                raise CommandConflict(
                    f"command {command_id} was already used with a different payload"
                )
            return cached["response"]
        response = apply()
        self._persist_new_events(actor)
        actor.commands[command_id] = {"payload": payload_key, "response": response}
        return response

    def submit_answer(self, session_id: str, command_id: str, submission) -> dict:
        actor = self._actor(session_id)
        with actor.lock:
            payload = {"submission": submission}
            return self._run_command(
                actor,
                command_id,
                payload,
                lambda: engine.submit_answer(
                    actor.session,
                    submission,
                    at=datetime.now(timezone.utc),
                    command_id=command_id,
                ).to_dict(),
            )

    def purchase_hint(
        self, session_id: str, command_id: str, kind: str, image_index: int | None
    ) -> dict:
        # keep the request payload in exactly the shape the engine logs, so
        # idempotency keys survive a restart-and-replay
        if kind == HintKind.REVEAL_LETTER.value and image_index is not None:
            raise ValueError("image_index only applies to verbal_cue hints")
        actor = self._actor(session_id)
        with actor.lock:
            payload = {"hint": kind}
            if image_index is not None:
                payload["image"] = image_index
            return self._run_command(
                actor,
                command_id,
                payload,
                lambda: engine.purchase_hint(
                    actor.session,
                    HintKind(kind),
                    image=image_index,
                    at=datetime.now(timezone.utc),
                    command_id=command_id,
                ).to_dict(),
            )

    def summary(self, session_id: str) -> dict:
        actor = self._actor(session_id)
        with actor.lock:
            return engine.session_summary(actor.session).to_dict()

    # -- analytics ---------------------------------------------------------

    def player_badges(self, player_id: str) -> list[dict]:
        self.get_player(player_id)
        names = {rule.badge_id: rule.name for rule in self.policy.badge_milestones}
        earned: dict[str, str] = {}
        for actor in self.actors.values():
            if actor.session.player_id != player_id:
                continue
            for event in actor.session.events:
                if event.kind == BADGE_AWARDED and event.badge not in earned:
                    earned[event.badge] = format_ts(event.ts)
        return [
            {"id": badge, "name": names.get(badge, badge), "awarded_at": ts}
            for badge, ts in earned.items()
        ]

    def player_progress(self, player_id: str) -> list[dict]:
        self.get_player(player_id)
        events = [e for e in self.event_log.read_all() if e.player_id == player_id]
        return [m.to_dict() for m in monthly_progress(events)]


# -- FastAPI layer ----------------------------------------------------------


class CreatePlayerIn(BaseModel):
    name: str = Field(min_length=1, max_length=80)


class ProfileEntryIn(BaseModel):
    question_id: str
    answer: str
    images: list[str] = Field(min_length=4, max_length=4)
    cues: list[str] = Field(min_length=4, max_length=4)


class ProfileIn(BaseModel):
    entries: list[ProfileEntryIn] = Field(min_length=3, max_length=3)


class StartSessionIn(BaseModel):
    seed: int | None = None


class AnswerIn(BaseModel):
    command_id: str = Field(min_length=1, max_length=128)
    submission: int | str


class HintIn(BaseModel):
    command_id: str = Field(min_length=1, max_length=128)
    kind: str
    image_index: int | None = None


def create_app(service: GameService, assets_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="cuequest", docs_url=None, redoc_url=None)
    app.state.service = service

    if assets_dir is not None and Path(assets_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/assets", StaticFiles(directory=str(assets_dir)), name="assets")

    def auth_player(authorization: str | None = Header(default=None)) -> PlayerRecord:
        if not authorization or not authorization.startswith("Bearer "):
            raise Unauthorized("missing bearer token")
        return service.player_by_token(authorization.removeprefix("Bearer ").strip())

    @app.exception_handler(GameError)
    async def on_game_error(_: Request, exc: GameError):
        status = ERROR_STATUS.get(exc.code, 400)
        body = {"error": exc.code, "detail": exc.message}
        if isinstance(exc, PackInvalid) and exc.violations:
            body["violations"] = exc.violations
        return JSONResponse(status_code=status, content=body)

    @app.exception_handler(ValueError)
    async def on_value_error(_: Request, exc: ValueError):
        return JSONResponse(status_code=422, content={"error": "invalid", "detail": str(exc)})

    @app.get("/health")
    def health():
        return {"status": "ok", "pack": service.pack.pack_id, "sessions": len(service.actors)}

    @app.post("/players", status_code=201)
    def create_player(body: CreatePlayerIn):
        record = service.create_player(body.name)
        return {"player_id": record.player_id, "token": record.token}

    @app.get("/questions")
    def questions():
        return {
            "questions": [
                {"id": q.question_id, "prompt": q.prompt} for q in service.pack.questions
            ]
        }

    @app.put("/players/{player_id}/profile")
    def put_profile(
        player_id: str, body: ProfileIn, caller: PlayerRecord = Depends(auth_player)
    ):
        if caller.player_id != player_id:
            raise Forbidden("token does not belong to this player")
        profile = service.put_profile(
            player_id, [entry.model_dump() for entry in body.entries]
        )
        return {
            "player_id": player_id,
            "questions": [e.question_id for e in profile.entries],
        }

    @app.post("/players/{player_id}/sessions", status_code=201)
    def start_session(
        player_id: str,
        body: StartSessionIn | None = None,
        caller: PlayerRecord = Depends(auth_player),
    ):
        if caller.player_id != player_id:
            raise Forbidden("token does not belong to this player")
        seed = body.seed if body else None
        session = service.start_session(player_id, seed=seed)
        return {"session_id": session.session_id, "seed": session.seed, "position": 1}

    def _owned_session(session_id: str, caller: PlayerRecord) -> SessionActor:
        actor = service._actor(session_id)
        if actor.session.player_id != caller.player_id:
            raise Forbidden("session belongs to another player")
        return actor

    @app.get("/sessions/{session_id}/current")
    def current(session_id: str, caller: PlayerRecord = Depends(auth_player)):
        _owned_session(session_id, caller)
        return service.session_view(session_id)

    @app.post("/sessions/{session_id}/answer")
    def answer(
        session_id: str, body: AnswerIn, caller: PlayerRecord = Depends(auth_player)
    ):
        _owned_session(session_id, caller)
        return service.submit_answer(session_id, body.command_id, body.submission)

    @app.post("/sessions/{session_id}/hint")
    def hint(session_id: str, body: HintIn, caller: PlayerRecord = Depends(auth_player)):
        _owned_session(session_id, caller)
        return service.purchase_hint(session_id, body.command_id, body.kind, body.image_index)

    @app.get("/sessions/{session_id}/summary")
    def summary(session_id: str, caller: PlayerRecord = Depends(auth_player)):
        _owned_session(session_id, caller)
        return service.summary(session_id)

    @app.get("/players/{player_id}/badges")
    def badges(player_id: str, caller: PlayerRecord = Depends(auth_player)):
        if caller.player_id != player_id:
            raise Forbidden("token does not belong to this player")
        return {"badges": service.player_badges(player_id)}

    @app.get("/players/{player_id}/progress")
    def progress(
        player_id: str,
        granularity: str = "monthly",
        caller: PlayerRecord = Depends(auth_player),
    ):
        if caller.player_id != player_id:
            raise Forbidden("token does not belong to this player")
        if granularity != "monthly":
            raise ValueError(f"unsupported granularity {granularity!r}")
        return {"granularity": "monthly", "series": service.player_progress(player_id)}

    return app


def build_service(
    data_dir: str | Path, pack_path: str | Path, policy: GamePolicy | None = None
) -> GameService:
    pack = load_pack(pack_path)
    return GameService(data_dir=data_dir, pack=pack, policy=policy)


def serve(data_dir: str | Path, pack_path: str | Path, bind: str = "127.0.0.1:8000"):
    """Run the service with uvicorn until interrupted."""
    import uvicorn

    host, _, port = bind.partition(":")
    app = create_app(
        build_service(data_dir, pack_path), assets_dir=Path(pack_path).parent / "assets"
    )
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8000), log_level="info")
