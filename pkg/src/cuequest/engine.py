"""The session state machine: schedule construction, answer adjudication,
the point economy, hint purchases and badge awards.

A session is fully determined by (pack, profile, policy, seed): the schedule,
every letter bank and every option list are derived from purpose-keyed
sub-streams of the session seed, so replaying the same inputs reproduces the
session bit for bit.
"""

import json
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum

from .content import (
    ChallengePack,
    LetterBank,
    build_letter_bank,
    build_recognition_options,
    is_composable,
    validate_pack,
)
from .errors import (
    AnswerTooLong,
    CueAlreadyShown,
    InsufficientPoints,
    MalformedLog,
    NoHintForRecognition,
    NotComposableFromBank,
    NothingToReveal,
    OptionOutOfRange,
    PackInvalid,
    PoolTooSmall,
    ProfileIncomplete,
    SessionNotActive,
    SessionNotCompleted,
)
from .events import (
    ANSWER_SUBMITTED,
    BADGE_AWARDED,
    CHALLENGE_SHOWN,
    HINT_PURCHASED,
    SESSION_COMPLETED,
    SESSION_STARTED,
    SessionEvent,
)
from .profile import REQUIRED_ENTRIES, SecurityProfile
from .rng import substream

SCHEDULE_LENGTH = 13
STANDARD_SLOT_COUNT = 7
RECOGNITION_POSITIONS = (2, 4, 6)
RECALL_POSITIONS = (8, 10, 12)

SESSION_SCHEMA_VERSION = 1


class ChallengeKind(str, Enum):
    STANDARD = "standard"
    RECOGNITION = "recognition"
    RECALL = "recall"


SECURITY_KINDS = (ChallengeKind.RECOGNITION, ChallengeKind.RECALL)


class SessionStatus(str, Enum):
    ACTIVE = "active"
    COMPLETED = "completed"


class NextState(str, Enum):
    SAME_CHALLENGE = "same_challenge"
    NEXT_CHALLENGE = "next_challenge"
    SESSION_COMPLETE = "session_complete"


class HintKind(str, Enum):
    REVEAL_LETTER = "reveal_letter"
    VERBAL_CUE = "verbal_cue"


@dataclass(frozen=True)
class BadgeRule:
    """A milestone over security-challenge progress. The rule holds once every
    listed count has been reached."""

    badge_id: str
    name: str
    recognition_solved: int = 0
    recall_solved: int = 0
    security_solved: int = 0

    def holds(self, recognition: int, recall: int) -> bool:
        return (
            recognition >= self.recognition_solved
            and recall >= self.recall_solved
            and recognition + recall >= self.security_solved
        )

    def to_dict(self) -> dict:
        return {
            "id": self.badge_id,
            "name": self.name,
            "recognition_solved": self.recognition_solved,
            "recall_solved": self.recall_solved,
            "security_solved": self.security_solved,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BadgeRule":
        return cls(
            badge_id=data["id"],
            name=data["name"],
            recognition_solved=data["recognition_solved"],
            recall_solved=data["recall_solved"],
            security_solved=data["security_solved"],
        )


DEFAULT_BADGES = (
    BadgeRule("first-step", "First Step", security_solved=1),
    BadgeRule("recognition-master", "Recognition Master", recognition_solved=3),
    BadgeRule("recall-master", "Recall Master", recall_solved=3),
    BadgeRule("memory-champion", "Memory Champion", security_solved=6),
)


@dataclass
class GamePolicy:
    """Tunable game economy: 10/15/20 points per challenge kind, 50 per hint,
    12-letter banks, hidden answer length. The defaults deliberately pay more
    for the harder security challenges."""

    award_standard: int = 10
    award_recognition: int = 15
    award_recall: int = 20
    hint_cost: int = 50
    bank_size: int = 12
    option_count: int = 4
    reveal_length: bool = False
    wrong_answer_penalty_equals_award: bool = True
    badge_milestones: list[BadgeRule] = field(default_factory=lambda: list(DEFAULT_BADGES))

    def __post_init__(self):
        for name in ("award_standard", "award_recognition", "award_recall", "hint_cost"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.bank_size < 1:
            raise ValueError("bank_size must be at least 1")
        if self.option_count < 2:
            raise ValueError("option_count must be at least 2")

    def award_for(self, kind: ChallengeKind) -> int:
        return {
            ChallengeKind.STANDARD: self.award_standard,
            ChallengeKind.RECOGNITION: self.award_recognition,
            ChallengeKind.RECALL: self.award_recall,
        }[kind]

    def to_dict(self) -> dict:
        return {
            "award_standard": self.award_standard,
            "award_recognition": self.award_recognition,
            "award_recall": self.award_recall,
            "hint_cost": self.hint_cost,
            "bank_size": self.bank_size,
            "option_count": self.option_count,
            "reveal_length": self.reveal_length,
            "wrong_answer_penalty_equals_award": self.wrong_answer_penalty_equals_award,
            "badge_milestones": [rule.to_dict() for rule in self.badge_milestones],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GamePolicy":
        data = dict(data)
        data["badge_milestones"] = [
            BadgeRule.from_dict(r) for r in data.get("badge_milestones", [])
        ]
        return cls(**data)


@dataclass(frozen=True)
class ScheduleSlot:
    position: int
    kind: ChallengeKind
    content_id: str

    def to_dict(self) -> dict:
        return {"position": self.position, "kind": self.kind.value, "content": self.content_id}


@dataclass
class Schedule:
    slots: list[ScheduleSlot]

    def to_dict(self) -> dict:
        return {"slots": [s.to_dict() for s in self.slots]}


def _content_id(kind: ChallengeKind, source_id: str) -> str:
    prefix = {
        ChallengeKind.STANDARD: "std",
        ChallengeKind.RECOGNITION: "rec",
        ChallengeKind.RECALL: "rcl",
    }[kind]
    return f"{prefix}:{source_id}"


def build_schedule(standard_pool: list[str], profile: SecurityProfile, seed: int) -> Schedule:
    """Lay out the 13 slots: standard challenges on odd positions, the three
    recognition challenges on 2/4/6, the three recall challenges on 8/10/12.

    Standard content is drawn without replacement; the security slots shuffle
    the profile's questions independently within each phase. Deterministic per
    seed. The alternation ends on a seventh standard challenge, which is the
    only strict interleave that yields the 7/3/3 totals.
    """
    if len(standard_pool) < STANDARD_SLOT_COUNT:
        raise PoolTooSmall(
            f"need {STANDARD_SLOT_COUNT} standard challenges, pool has {len(standard_pool)}"
        )
    if len(profile.entries) != REQUIRED_ENTRIES:
        raise ProfileIncomplete(
            f"profile has {len(profile.entries)} configured questions, need {REQUIRED_ENTRIES}"
        )
    standard_ids = substream(seed, "schedule-standard").sample(
        list(standard_pool), STANDARD_SLOT_COUNT
    )
    question_ids = [e.question_id for e in profile.entries]
    recognition_ids = list(question_ids)
    substream(seed, "schedule-recognition").shuffle(recognition_ids)
    recall_ids = list(question_ids)
    substream(seed, "schedule-recall").shuffle(recall_ids)

    slots = []
    standard_iter = iter(standard_ids)
    recognition_iter = iter(recognition_ids)
    recall_iter = iter(recall_ids)
    for position in range(1, SCHEDULE_LENGTH + 1):
        if position % 2 == 1:
            kind, source = ChallengeKind.STANDARD, next(standard_iter)
        elif position in RECOGNITION_POSITIONS:
            kind, source = ChallengeKind.RECOGNITION, next(recognition_iter)
        else:
            kind, source = ChallengeKind.RECALL, next(recall_iter)
        slots.append(ScheduleSlot(position, kind, _content_id(kind, source)))
    return Schedule(slots=slots)


@dataclass
class SessionSlot:
    """A schedule slot resolved to playable content plus its live progress."""

    position: int
    kind: ChallengeKind
    content_id: str
    source_id: str
    answer: str
    images: list[str]
    verbal_cues: list[str]
    prompt: str | None = None
    bank: LetterBank | None = None
    options: list[str] | None = None
    solved: bool = False
    wrong_attempts: int = 0
    revealed_count: int = 0
    cues_shown: list[int] = field(default_factory=list)
    reveals_bought: int = 0

    def revealed_letters(self) -> str:
        return self.answer[: self.revealed_count]

    def to_dict(self) -> dict:
        return {
            "position": self.position,
            "kind": self.kind.value,
            "content": self.content_id,
            "source": self.source_id,
            "answer": self.answer,
            "images": list(self.images),
            "cues": list(self.verbal_cues),
            "prompt": self.prompt,
            "bank": self.bank.to_dict() if self.bank else None,
            "options": list(self.options) if self.options else None,
            "solved": self.solved,
            "wrong_attempts": self.wrong_attempts,
            "revealed_count": self.revealed_count,
            "cues_shown": list(self.cues_shown),
            "reveals_bought": self.reveals_bought,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SessionSlot":
        return cls(
            position=data["position"],
            kind=ChallengeKind(data["kind"]),
            content_id=data["content"],
            source_id=data["source"],
            answer=data["answer"],
            images=list(data["images"]),
            verbal_cues=list(data["cues"]),
            prompt=data["prompt"],
            bank=LetterBank.from_dict(data["bank"]) if data["bank"] else None,
            options=list(data["options"]) if data["options"] else None,
            solved=data["solved"],
            wrong_attempts=data["wrong_attempts"],
            revealed_count=data["revealed_count"],
            cues_shown=list(data["cues_shown"]),
            reveals_bought=data["reveals_bought"],
        )


@dataclass
class GameSession:
    session_id: str
    player_id: str
    seed: int
    policy: GamePolicy
    slots: list[SessionSlot]
    cursor: int = 1
    points: int = 0
    status: SessionStatus = SessionStatus.ACTIVE
    badges: list[str] = field(default_factory=list)
    events: list[SessionEvent] = field(default_factory=list)

    @property
    def current_slot(self) -> SessionSlot:
        return self.slots[self.cursor - 1]

    def solved_count(self, kind: ChallengeKind) -> int:
        return sum(1 for s in self.slots if s.kind == kind and s.solved)

    def to_dict(self) -> dict:
        return {
            "version": SESSION_SCHEMA_VERSION,
            "session": self.session_id,
            "player": self.player_id,
            "seed": self.seed,
            "policy": self.policy.to_dict(),
            "slots": [s.to_dict() for s in self.slots],
            "cursor": self.cursor,
            "points": self.points,
            "status": self.status.value,
            "badges": list(self.badges),
            "events": [e.to_dict() for e in self.events],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GameSession":
        return cls(
            session_id=data["session"],
            player_id=data["player"],
            seed=data["seed"],
            policy=GamePolicy.from_dict(data["policy"]),
            slots=[SessionSlot.from_dict(s) for s in data["slots"]],
            cursor=data["cursor"],
            points=data["points"],
            status=SessionStatus(data["status"]),
            badges=list(data["badges"]),
            events=[SessionEvent.from_dict(e) for e in data["events"]],
        )

    def fingerprint(self) -> str:
        """Canonical serialized form, for byte-level state comparison."""
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


@dataclass
class ChallengeView:
    """What the player is allowed to see of the current slot. Never carries
    the answer; carries its length only when the policy opts in."""

    position: int
    total: int
    kind: str
    images: list[str]
    prompt: str | None = None
    bank: list[dict] | None = None
    revealed: list[dict] | None = None
    options: list[str] | None = None
    cues_shown: list[dict] | None = None
    answer_letter_count: int | None = None

    def to_dict(self) -> dict:
        view = {
            "position": self.position,
            "total": self.total,
            "kind": self.kind,
            "images": list(self.images),
            "prompt": self.prompt,
        }
        if self.options is not None:
            view["options"] = list(self.options)
        if self.bank is not None:
            view["bank"] = self.bank
            view["revealed"] = self.revealed or []
            view["cues_shown"] = self.cues_shown or []
        if self.answer_letter_count is not None:
            view["answer_letter_count"] = self.answer_letter_count
        return view


@dataclass
class Outcome:
    correct: bool
    points_delta: int
    points: int
    badges_awarded: list[str]
    next_state: NextState

    def to_dict(self) -> dict:
        return {
            "correct": self.correct,
            "points_delta": self.points_delta,
            "points": self.points,
            "badges_awarded": list(self.badges_awarded),
            "next_state": self.next_state.value,
        }


@dataclass
class HintResult:
    hint: HintKind
    points_delta: int
    points: int
    position: int | None = None
    letter: str | None = None
    image: int | None = None
    cue_text: str | None = None

    def to_dict(self) -> dict:
        result = {
            "hint": self.hint.value,
            "points_delta": self.points_delta,
            "points": self.points,
        }
        if self.hint is HintKind.REVEAL_LETTER:
            result["position"] = self.position
            result["letter"] = self.letter
        else:
            result["image"] = self.image
            result["cue_text"] = self.cue_text
        return result


@dataclass
class Summary:
    solved_standard: int
    solved_recognition: int
    solved_recall: int
    hints_standard: int
    hints_recall: int
    verbal_cues_used: int
    wrong_attempts: int
    final_points: int
    duration_seconds: float
    badges: list[str]

    @property
    def solved_total(self) -> int:
        return self.solved_standard + self.solved_recognition + self.solved_recall

    def to_dict(self) -> dict:
        return {
            "solved": {
                "standard": self.solved_standard,
                "recognition": self.solved_recognition,
                "recall": self.solved_recall,
                "total": self.solved_total,
            },
            "hints": {
                "standard": self.hints_standard,
                "recall": self.hints_recall,
                "total": self.hints_standard + self.hints_recall,
            },
            "verbal_cues_used": self.verbal_cues_used,
            "wrong_attempts": self.wrong_attempts,
            "final_points": self.final_points,
            "duration_seconds": self.duration_seconds,
            "badges": list(self.badges),
        }


def _now() -> datetime:
    return datetime.now(timezone.utc)


def _resolve_slot(
    slot: ScheduleSlot,
    pack: ChallengePack,
    profile: SecurityProfile,
    policy: GamePolicy,
    seed: int,
) -> SessionSlot:
    source = slot.content_id.split(":", 1)[1]
    if slot.kind is ChallengeKind.STANDARD:
        challenge = pack.challenge(source)
        answer, images, cues, prompt = (
            challenge.answer,
            challenge.images,
            challenge.verbal_cues,
            None,
        )
    else:
        entry = profile.entry(source)
        answer, images, cues = entry.answer, entry.images, entry.verbal_cues
        try:
            prompt = pack.question(source).prompt
        except KeyError:
            prompt = None
    resolved = SessionSlot(
        position=slot.position,
        kind=slot.kind,
        content_id=slot.content_id,
        source_id=source,
        answer=answer,
        images=list(images),
        verbal_cues=list(cues),
        prompt=prompt,
    )
    if slot.kind is ChallengeKind.RECOGNITION:
        option_seed = substream(seed, "slot-options", slot.position).randrange(2**32)
        resolved.options = build_recognition_options(
            answer, pack.distractors, policy.option_count, option_seed
        )
    else:
        bank_seed = substream(seed, "slot-bank", slot.position).randrange(2**32)
        resolved.bank = build_letter_bank(answer, bank_seed, bank_size=policy.bank_size)
    return resolved


def start_session(
    player_id: str,
    pack: ChallengePack,
    profile: SecurityProfile,
    policy: GamePolicy | None = None,
    seed: int | None = None,
    *,
    session_id: str | None = None,
    at: datetime | None = None,
) -> GameSession:
    """Open a session at slot 1 with zero points and a fully resolved schedule."""
    policy = policy or GamePolicy()
    seed = seed if seed is not None else uuid.uuid4().int % (2**32)
    at = at or _now()
    session_id = session_id or f"sess-{uuid.uuid4().hex[:12]}"

    report = validate_pack(pack)
    if not report.ok:
        raise PackInvalid("pack failed validation", violations=report.violations)
    for entry in profile.entries:
        if len(entry.answer) > policy.bank_size:
            raise AnswerTooLong(
                f"answer for {entry.question_id!r} has {len(entry.answer)} letters, "
                f"the bank holds {policy.bank_size}"
            )

    schedule = build_schedule([c.challenge_id for c in pack.challenges], profile, seed)
    slots = [_resolve_slot(s, pack, profile, policy, seed) for s in schedule.slots]
    session = GameSession(
        session_id=session_id,
        player_id=player_id,
        seed=seed,
        policy=policy,
        slots=slots,
    )
    session.events.append(
        SessionEvent(
            ts=at,
            session_id=session_id,
            player_id=player_id,
            kind=SESSION_STARTED,
            points=0,
            seed=seed,
        )
    )
    session.events.append(_shown_event(session, at))
    return session


def _shown_event(session: GameSession, at: datetime) -> SessionEvent:
    slot = session.current_slot
    return SessionEvent(
        ts=at,
        session_id=session.session_id,
        player_id=session.player_id,
        kind=CHALLENGE_SHOWN,
        points=session.points,
        slot=slot.position,
        challenge_kind=slot.kind.value,
    )


def current_challenge(session: GameSession) -> ChallengeView:
    """The sanitized view of the current slot."""
    if session.status is not SessionStatus.ACTIVE:
        raise SessionNotActive("session is not active")
    slot = session.current_slot
    view = ChallengeView(
        position=slot.position,
        total=SCHEDULE_LENGTH,
        kind=slot.kind.value,
        images=list(slot.images),
        prompt=slot.prompt,
    )
    if slot.kind is ChallengeKind.RECOGNITION:
        view.options = list(slot.options or [])
    else:
        bank = slot.bank
        view.bank = [
            {"letter": letter, "consumed": consumed}
            for letter, consumed in zip(bank.letters, bank.consumed)
        ]
        view.revealed = [
            {"position": i + 1, "letter": slot.answer[i]}
            for i in range(slot.revealed_count)
        ]
        view.cues_shown = [
            {"image": i, "text": slot.verbal_cues[i - 1]} for i in sorted(slot.cues_shown)
        ]
        if session.policy.reveal_length:
            view.answer_letter_count = len(slot.answer)
    return view


def award_badges(session: GameSession, at: datetime) -> list[str]:
    """Award, in milestone-table order, every unearned badge whose predicate
    now holds. Called after each correct security-challenge resolution."""
    recognition = session.solved_count(ChallengeKind.RECOGNITION)
    recall = session.solved_count(ChallengeKind.RECALL)
    awarded = []
    for rule in session.policy.badge_milestones:
        if rule.badge_id in session.badges:
            continue
        if rule.holds(recognition, recall):
            session.badges.append(rule.badge_id)
            awarded.append(rule.badge_id)
            session.events.append(
                SessionEvent(
                    ts=at,
                    session_id=session.session_id,
                    player_id=session.player_id,
                    kind=BADGE_AWARDED,
                    points=session.points,
                    badge=rule.badge_id,
                )
            )
    return awarded


def submit_answer(
    session: GameSession,
    submission: str | int,
    *,
    at: datetime | None = None,
    command_id: str | None = None,
) -> Outcome:
    """Adjudicate one guess.

    Correct answers pay the kind's award and advance the schedule; wrong
    answers deduct the same amount clamped at the zero-balance floor and the
    challenge stays active for unlimited retries.
    """
    if session.status is not SessionStatus.ACTIVE:
        raise SessionNotActive("session is not active")
    at = at or _now()
    slot = session.current_slot

    # the logged payload keeps the submission exactly as received, so a
    # replayed command re-normalizes identically and retry payload keys match
    payload = {"submission": submission}
    if slot.kind is ChallengeKind.RECOGNITION:
        index = _as_option_index(submission)
        if not 0 <= index < len(slot.options or []):
            raise OptionOutOfRange(f"option index {index} out of range")
        correct = slot.options[index] == slot.answer
    else:
        if not isinstance(submission, str):
            raise NotComposableFromBank("text challenges take a text submission")
        guess = submission.strip().upper()
        if not guess or not is_composable(
            guess, slot.bank.available(), slot.revealed_letters()
        ):
            raise NotComposableFromBank(
                "guess cannot be composed from the available letters"
            )
        correct = guess == slot.answer

    award = session.policy.award_for(slot.kind)
    if correct:
        delta = award
        slot.solved = True
    else:
        penalty = award if session.policy.wrong_answer_penalty_equals_award else 0
        delta = -min(session.points, penalty)
        slot.wrong_attempts += 1
    session.points += delta

    session.events.append(
        SessionEvent(
            ts=at,
            session_id=session.session_id,
            player_id=session.player_id,
            kind=ANSWER_SUBMITTED,
            points=session.points,
            slot=slot.position,
            challenge_kind=slot.kind.value,
            correct=correct,
            command_id=command_id,
            payload=payload,
        )
    )

    badges_awarded: list[str] = []
    if correct and slot.kind in SECURITY_KINDS:
        badges_awarded = award_badges(session, at)

    if not correct:
        next_state = NextState.SAME_CHALLENGE
    elif session.cursor == SCHEDULE_LENGTH:
        session.status = SessionStatus.COMPLETED
        session.events.append(
            SessionEvent(
                ts=at,
                session_id=session.session_id,
                player_id=session.player_id,
                kind=SESSION_COMPLETED,
                points=session.points,
            )
        )
        next_state = NextState.SESSION_COMPLETE
    else:
        session.cursor += 1
        session.events.append(_shown_event(session, at))
        next_state = NextState.NEXT_CHALLENGE

    return Outcome(
        correct=correct,
        points_delta=delta,
        points=session.points,
        badges_awarded=badges_awarded,
        next_state=next_state,
    )


def _as_option_index(submission: str | int) -> int:
    if isinstance(submission, bool):
        raise OptionOutOfRange("expected an option index")
    if isinstance(submission, int):
        return submission
    if isinstance(submission, str) and submission.strip().isdigit():
        return int(submission.strip())
    raise OptionOutOfRange("expected an option index")


def purchase_hint(
    session: GameSession,
    hint: HintKind,
    *,
    image: int | None = None,
    at: datetime | None = None,
    command_id: str | None = None,
) -> HintResult:
    """Spend `hint_cost` points on a letter reveal or a verbal cue.

    Recognition slots sell no hints: picking from options is already the easy
    mode. Letter reveals uncover the leftmost hidden position and consume a
    matching bank cell; each image's verbal cue can be bought once.
    """
    if session.status is not SessionStatus.ACTIVE:
        raise SessionNotActive("session is not active")
    at = at or _now()
    slot = session.current_slot
    if slot.kind is ChallengeKind.RECOGNITION:
        raise NoHintForRecognition("recognition challenges have no hints")
    cost = session.policy.hint_cost
    if session.points < cost:
        raise InsufficientPoints(f"balance {session.points} is below the hint cost {cost}")

    if hint is HintKind.REVEAL_LETTER:
        if slot.revealed_count >= len(slot.answer):
            raise NothingToReveal("every answer position is already revealed")
        letter = slot.answer[slot.revealed_count]
        slot.bank.consume_letter(letter)
        slot.revealed_count += 1
        slot.reveals_bought += 1
        session.points -= cost
        result = HintResult(
            hint=hint,
            points_delta=-cost,
            points=session.points,
            position=slot.revealed_count,
            letter=letter,
        )
        payload = {"hint": hint.value}
    else:
        if image is None or not 1 <= image <= len(slot.verbal_cues):
            raise ValueError("image index must be between 1 and 4")
        if image in slot.cues_shown:
            raise CueAlreadyShown(f"cue for image {image} was already purchased")
        slot.cues_shown.append(image)
        session.points -= cost
        result = HintResult(
            hint=hint,
            points_delta=-cost,
            points=session.points,
            image=image,
            cue_text=slot.verbal_cues[image - 1],
        )
        payload = {"hint": hint.value, "image": image}

    session.events.append(
        SessionEvent(
            ts=at,
            session_id=session.session_id,
            player_id=session.player_id,
            kind=HINT_PURCHASED,
            points=session.points,
            slot=slot.position,
            challenge_kind=slot.kind.value,
            hint=hint.value,
            image=image if hint is HintKind.VERBAL_CUE else None,
            command_id=command_id,
            payload=payload,
        )
    )
    return result


def session_summary(session: GameSession) -> Summary:
    """Final numbers for a completed session, including the wall-clock span
    from the first challenge view to the last resolution."""
    if session.status is not SessionStatus.COMPLETED:
        raise SessionNotCompleted("session is still active")
    first_view = next(e.ts for e in session.events if e.kind == CHALLENGE_SHOWN)
    last_resolution = max(
        e.ts for e in session.events if e.kind == ANSWER_SUBMITTED and e.correct
    )
    return Summary(
        solved_standard=session.solved_count(ChallengeKind.STANDARD),
        solved_recognition=session.solved_count(ChallengeKind.RECOGNITION),
        solved_recall=session.solved_count(ChallengeKind.RECALL),
        hints_standard=sum(
            s.reveals_bought for s in session.slots if s.kind is ChallengeKind.STANDARD
        ),
        hints_recall=sum(
            s.reveals_bought for s in session.slots if s.kind is ChallengeKind.RECALL
        ),
        verbal_cues_used=sum(len(s.cues_shown) for s in session.slots),
        wrong_attempts=sum(s.wrong_attempts for s in session.slots),
        final_points=session.points,
        duration_seconds=(last_resolution - first_view).total_seconds(),
        badges=list(session.badges),
    )


def replay_commands(session: GameSession, logged: list[SessionEvent]) -> GameSession:
    """Re-apply the command events past the session's current history.

    `logged` is the full event sequence for this session from the log files.
    Events the session already holds are skipped; each later command event is
    pushed back through the engine with its logged timestamp, which reproduces
    every derived event and the final state exactly.
    """
    pointer = len(session.events)
    while pointer < len(logged):
        event = logged[pointer]
        if event.kind == ANSWER_SUBMITTED:
            submit_answer(
                session,
                event.payload["submission"],
                at=event.ts,
                command_id=event.command_id,
            )
        elif event.kind == HINT_PURCHASED:
            purchase_hint(
                session,
                HintKind(event.hint),
                image=event.image,
                at=event.ts,
                command_id=event.command_id,
            )
        else:
            raise MalformedLog(
                f"expected a command event at index {pointer}, got {event.kind}"
            )
        pointer = len(session.events)
    return session
