"""Log-derived metrics, cohort aggregates, SUS questionnaire scoring and the
monthly progress series."""

import statistics
from dataclasses import dataclass
from enum import Enum

from .errors import EmptyCohort, ItemOutOfRange, MalformedLog, ScoreOutOfRange
from .events import (
    ANSWER_SUBMITTED,
    HINT_PURCHASED,
    SESSION_COMPLETED,
    SESSION_STARTED,
    SessionEvent,
)

SUS_ITEM_COUNT = 10

# Adjective-scale anchor scores for "ok" and "good".
SUS_OK = 50.9
SUS_GOOD = 71.4


@dataclass
class SessionMetrics:
    """Per-session numbers recomputed from the event log alone."""

    session_id: str
    player_id: str
    solved_standard: int = 0
    solved_recognition: int = 0
    solved_recall: int = 0
    hints_standard: int = 0
    hints_recall: int = 0
    verbal_cues_used: int = 0
    wrong_attempts: int = 0
    final_points: int = 0
    duration_minutes: float = 0.0
    completed: bool = False

    @property
    def solved_total(self) -> int:
        return self.solved_standard + self.solved_recognition + self.solved_recall

    @property
    def hints_total(self) -> int:
        return self.hints_standard + self.hints_recall


def session_metrics(events: list[SessionEvent]) -> SessionMetrics:
    """Fold one session's events into metrics.

    A slot counts as solved on its first correct submission; later events for
    the same slot cannot double-count it. Duration runs from SessionStarted
    to the last event.
    """
    if not events:
        raise MalformedLog("no events")
    if events[0].kind != SESSION_STARTED:
        raise MalformedLog("log must begin with a session start")
    session_id = events[0].session_id
    last_ts = events[0].ts
    for event in events:
        if event.session_id != session_id:
            raise MalformedLog("events from more than one session")
        if event.ts < last_ts:
            raise MalformedLog("timestamps go backwards")
        last_ts = event.ts
    if sum(1 for e in events if e.kind == SESSION_COMPLETED) > 1:
        raise MalformedLog("more than one completion event")

    metrics = SessionMetrics(session_id=session_id, player_id=events[0].player_id)
    solved_slots: set[int] = set()
    for event in events:
        if event.kind == ANSWER_SUBMITTED:
            if event.correct and event.slot not in solved_slots:
                solved_slots.add(event.slot)
                if event.challenge_kind == "standard":
                    metrics.solved_standard += 1
                elif event.challenge_kind == "recognition":
                    metrics.solved_recognition += 1
                elif event.challenge_kind == "recall":
                    metrics.solved_recall += 1
            elif not event.correct:
                metrics.wrong_attempts += 1
        elif event.kind == HINT_PURCHASED:
            if event.hint == "verbal_cue":
                metrics.verbal_cues_used += 1
            elif event.challenge_kind == "standard":
                metrics.hints_standard += 1
            elif event.challenge_kind == "recall":
                metrics.hints_recall += 1
        elif event.kind == SESSION_COMPLETED:
            metrics.completed = True
        metrics.final_points = event.points
    metrics.duration_minutes = (events[-1].ts - events[0].ts).total_seconds() / 60.0
    return metrics


def split_by_session(events: list[SessionEvent]) -> dict[str, list[SessionEvent]]:
    """Group a mixed log by session id, preserving order."""
    by_session: dict[str, list[SessionEvent]] = {}
    for event in events:
        by_session.setdefault(event.session_id, []).append(event)
    return by_session


@dataclass
class Aggregate:
    mean: float
    median: float
    sd: float

    def to_dict(self) -> dict:
        return {"mean": self.mean, "median": self.median, "sd": self.sd}


def aggregate(values: list[float]) -> Aggregate:
    """Mean, median (midpoint for even n) and sample standard deviation
    (n - 1 denominator; defined as 0 for a single value)."""
    if not values:
        raise EmptyCohort("no values to aggregate")
    sd = statistics.stdev(values) if len(values) > 1 else 0.0
    return Aggregate(
        mean=statistics.mean(values), median=statistics.median(values), sd=sd
    )


def sus_score(items: list[int]) -> float:
    """Score a 10-item SUS response on the 0..100 scale.

    Odd items contribute (score - 1), even items (5 - score); the sum is
    scaled by 2.5, so results always land on the 2.5 grid.
    """
    if len(items) != SUS_ITEM_COUNT:
        raise ItemOutOfRange(f"expected {SUS_ITEM_COUNT} items, got {len(items)}")
    total = 0
    for i, item in enumerate(items, start=1):
        if not isinstance(item, int) or isinstance(item, bool) or not 1 <= item <= 5:
            raise ItemOutOfRange(f"item {i} must be an integer 1..5, got {item!r}")
        total += (item - 1) if i % 2 == 1 else (5 - item)
    return total * 2.5


class AdjectiveBand(str, Enum):
    BELOW_OK = "below-ok"
    OK = "ok"
    OK_GOOD = "ok-good"
    GOOD = "good"
    ABOVE_GOOD = "above-good"


@dataclass(frozen=True)
class AdjectiveRating:
    band: AdjectiveBand
    nearer: str | None = None  # "ok" or "good", only for the in-between band

    def label(self) -> str:
        if self.band is AdjectiveBand.OK_GOOD:
            return f"between ok and good, nearer {self.nearer}"
        return self.band.value

    def to_dict(self) -> dict:
        return {"band": self.band.value, "nearer": self.nearer}


def sus_adjective(score: float) -> AdjectiveRating:
    """Place a SUS score against the ok (50.9) and good (71.4) anchors.

    Scores strictly between the anchors report which one they are nearer to
    by absolute distance; an exact midpoint resolves to the higher anchor.
    """
    if not 0 <= score <= 100:
        raise ScoreOutOfRange(f"score {score} is outside 0..100")
    if score < SUS_OK:
        return AdjectiveRating(AdjectiveBand.BELOW_OK)
    if score == SUS_OK:
        return AdjectiveRating(AdjectiveBand.OK)
    if score == SUS_GOOD:
        return AdjectiveRating(AdjectiveBand.GOOD)
    if score > SUS_GOOD:
        return AdjectiveRating(AdjectiveBand.ABOVE_GOOD)
    nearer = "good" if (score - SUS_OK) >= (SUS_GOOD - score) else "ok"
    return AdjectiveRating(AdjectiveBand.OK_GOOD, nearer=nearer)


@dataclass
class MonthProgress:
    month: str  # "YYYY-MM"
    attempted: int
    solved: int
    rate: float

    def to_dict(self) -> dict:
        return {
            "month": self.month,
            "attempted": self.attempted,
            "solved": self.solved,
            "rate": self.rate,
        }


SECURITY_CHALLENGE_KINDS = ("recognition", "recall")


def monthly_progress(events: list[SessionEvent]) -> list[MonthProgress]:
    """Per-calendar-month security-challenge progress for one player.

    A (session, slot) pair counts as attempted in the month of its first
    submission and as solved in the month it was first answered correctly.
    Months with no security activity are omitted.
    """
    attempted_slots: dict[tuple[str, int], str] = {}
    solved_slots: dict[tuple[str, int], str] = {}
    for event in sorted(events, key=lambda e: e.ts):
        if event.kind != ANSWER_SUBMITTED:
            continue
        if event.challenge_kind not in SECURITY_CHALLENGE_KINDS:
            continue
        month = event.ts.strftime("%Y-%m")
        key = (event.session_id, event.slot)
        attempted_slots.setdefault(key, month)
        if event.correct:
            solved_slots.setdefault(key, month)

    months: dict[str, MonthProgress] = {}
    for month in attempted_slots.values():
        months.setdefault(month, MonthProgress(month, 0, 0, 0.0)).attempted += 1
    for month in solved_slots.values():
        months.setdefault(month, MonthProgress(month, 0, 0, 0.0)).solved += 1
    series = []
    for month in sorted(months):
        entry = months[month]
        entry.rate = entry.solved / entry.attempted if entry.attempted else 0.0
        series.append(entry)
    return series


@dataclass
class CohortReport:
    """Aggregates over a list of session metrics: per-kind solve counts,
    hint and cue usage, points and duration, each as mean/median/sd."""

    sessions: int
    solved_total: Aggregate
    solved_standard: Aggregate
    solved_recognition: Aggregate
    solved_recall: Aggregate
    hints: Aggregate
    verbal_cues: Aggregate
    points: Aggregate
    duration_minutes: Aggregate

    def to_dict(self) -> dict:
        return {
            "sessions": self.sessions,
            "solved_total": self.solved_total.to_dict(),
            "solved_standard": self.solved_standard.to_dict(),
            "solved_recognition": self.solved_recognition.to_dict(),
            "solved_recall": self.solved_recall.to_dict(),
            "hints": self.hints.to_dict(),
            "verbal_cues": self.verbal_cues.to_dict(),
            "points": self.points.to_dict(),
            "duration_minutes": self.duration_minutes.to_dict(),
        }


def cohort_report(metrics: list[SessionMetrics]) -> CohortReport:
    if not metrics:
        raise EmptyCohort("no sessions to report on")
    return CohortReport(
        sessions=len(metrics),
        solved_total=aggregate([m.solved_total for m in metrics]),
        solved_standard=aggregate([m.solved_standard for m in metrics]),
        solved_recognition=aggregate([m.solved_recognition for m in metrics]),
        solved_recall=aggregate([m.solved_recall for m in metrics]),
        hints=aggregate([m.hints_total for m in metrics]),
        verbal_cues=aggregate([m.verbal_cues_used for m in metrics]),
        points=aggregate([m.final_points for m in metrics]),
        duration_minutes=aggregate([m.duration_minutes for m in metrics]),
    )


def format_cohort_report(report: CohortReport) -> str:
    """Readable aggregate block: one line per metric with mean, median and
    sample deviation."""

    def line(label: str, agg: Aggregate, denom: str = "") -> str:
        mean = f"{agg.mean:.1f}{denom}"
        return f"{label:<24} {mean:>10}  (med={agg.median:g}, σ=±{agg.sd:.1f})"

    rows = [
        f"sessions: {report.sessions}",
        line("solved challenges", report.solved_total, "/13"),
        line("  (a) standard", report.solved_standard, "/7"),
        line("  (b) recognition", report.solved_recognition, "/3"),
        line("  (c) recall", report.solved_recall, "/3"),
        line("hints used", report.hints),
        line("verbal cues used", report.verbal_cues),
        line("final points", report.points),
        line("duration (minutes)", report.duration_minutes),
    ]
    return "\n".join(rows)
