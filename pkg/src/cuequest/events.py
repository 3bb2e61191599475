"""Session event records and the newline-delimited log files they live in.

One event per line, append-only, one file per UTC day. The record schema is
versioned via the ``v`` field; mutating events also carry the command that
produced them so a restarted service can replay the log through the engine
and land on the exact same state.
"""

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from .errors import MalformedLog

EVENT_SCHEMA_VERSION = 1

SESSION_STARTED = "session_started"
CHALLENGE_SHOWN = "challenge_shown"
ANSWER_SUBMITTED = "answer_submitted"
HINT_PURCHASED = "hint_purchased"
BADGE_AWARDED = "badge_awarded"
SESSION_COMPLETED = "session_completed"

COMMAND_EVENTS = {ANSWER_SUBMITTED, HINT_PURCHASED}


def format_ts(ts: datetime) -> str:
    """UTC ISO-8601 with millisecond precision, e.g. 2026-08-09T12:00:00.000Z."""
    ts = ts.astimezone(timezone.utc)
    return ts.strftime("%Y-%m-%dT%H:%M:%S.") + f"{ts.microsecond // 1000:03d}Z"


def parse_ts(text: str) -> datetime:
    return datetime.strptime(text, "%Y-%m-%dT%H:%M:%S.%fZ").replace(tzinfo=timezone.utc)


@dataclass
class SessionEvent:
    """One timestamped game action.

    `points` is the balance after the event. Kind-specific fields stay None
    when they do not apply and are omitted from the serialized record.
    """

    ts: datetime
    session_id: str
    player_id: str
    kind: str
    points: int
    slot: int | None = None
    challenge_kind: str | None = None
    correct: bool | None = None
    hint: str | None = None
    image: int | None = None
    badge: str | None = None
    seed: int | None = None
    command_id: str | None = None
    payload: dict | None = field(default=None)

    def to_dict(self) -> dict:
        record = {
            "v": EVENT_SCHEMA_VERSION,
            "ts": format_ts(self.ts),
            "session": self.session_id,
            "player": self.player_id,
            "event": self.kind,
            "points": self.points,
        }
        for key, value in [
            ("slot", self.slot),
            ("kind", self.challenge_kind),
            ("correct", self.correct),
            ("hint", self.hint),
            ("image", self.image),
            ("badge", self.badge),
            ("seed", self.seed),
            ("command_id", self.command_id),
            ("payload", self.payload),
        ]:
            if value is not None:
                record[key] = value
        return record

    @classmethod
    def from_dict(cls, record: dict) -> "SessionEvent":
        try:
            return cls(
                ts=parse_ts(record["ts"]),
                session_id=record["session"],
                player_id=record["player"],
                kind=record["event"],
                points=record["points"],
                slot=record.get("slot"),
                challenge_kind=record.get("kind"),
                correct=record.get("correct"),
                hint=record.get("hint"),
                image=record.get("image"),
                badge=record.get("badge"),
                seed=record.get("seed"),
                command_id=record.get("command_id"),
                payload=record.get("payload"),
            )
        except (KeyError, ValueError, TypeError) as exc:
            raise MalformedLog(f"bad event record: {exc}") from exc

    def to_line(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


class EventLog:
    """Appends events to per-day NDJSON files under a directory.

    A group of events (everything one command produced) is flushed in a
    single write so a crash never interleaves or splits a group across the
    fsync boundary.
    """

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def _file_for(self, ts: datetime) -> Path:
        day = ts.astimezone(timezone.utc).strftime("%Y-%m-%d")
        return self.directory / f"{day}.ndjson"

    def append(self, events: list[SessionEvent]):
        if not events:
            return
        chunks: dict[Path, list[str]] = {}
        for event in events:
            chunks.setdefault(self._file_for(event.ts), []).append(event.to_line())
        for path, lines in chunks.items():
            with path.open("a", encoding="utf-8") as fh:
                fh.write("\n".join(lines) + "\n")
                fh.flush()

    def read_all(self) -> list[SessionEvent]:
        """All events in append order (day files sort chronologically, lines
        within a file are authoritative); a torn trailing line from an
        interrupted write is dropped."""
        events: list[SessionEvent] = []
        for path in sorted(self.directory.glob("*.ndjson")):
            events.extend(read_event_file(path))
        return events


def read_event_file(path: str | Path) -> list[SessionEvent]:
    events = []
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    for i, line in enumerate(lines):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError:
            if i == len(lines) - 1:
                continue  # torn final line from an interrupted append
            raise MalformedLog(f"{path}:{i + 1} is not valid JSON")
        events.append(SessionEvent.from_dict(record))
    return events


def read_event_glob(pattern: str) -> list[SessionEvent]:
    """Read every event from files matching a glob, sorted by timestamp."""
    paths = sorted(Path().glob(pattern)) if not Path(pattern).is_absolute() else sorted(
        Path(pattern).parent.glob(Path(pattern).name)
    )
    events: list[SessionEvent] = []
    for path in paths:
        events.extend(read_event_file(path))
    events.sort(key=lambda e: e.ts)
    return events
