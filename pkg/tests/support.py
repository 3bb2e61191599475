"""Shared helpers for driving engine sessions in tests."""

from datetime import datetime, timedelta, timezone

from cuequest import engine
from cuequest.engine import ChallengeKind, SessionStatus

T0 = datetime(2026, 3, 1, 12, 0, 0, tzinfo=timezone.utc)


class TickClock:
    """Deterministic clock: advances a fixed step per action."""

    def __init__(self, start=T0, step_seconds=5):
        self.now = start
        self.step = timedelta(seconds=step_seconds)

    def tick(self):
        self.now += self.step
        return self.now


def correct_submission(slot):
    if slot.kind is ChallengeKind.RECOGNITION:
        return slot.options.index(slot.answer)
    return slot.answer


def wrong_submission(slot):
    if slot.kind is ChallengeKind.RECOGNITION:
        return next(i for i, o in enumerate(slot.options) if o != slot.answer)
    available = sorted(set(slot.bank.available()) | set(slot.revealed_letters()))
    guess = available[0]
    if guess == slot.answer:
        guess = "".join(available[:2])
    return guess


def play_perfect(session, clock=None):
    clock = clock or TickClock()
    while session.status is SessionStatus.ACTIVE:
        engine.submit_answer(
            session, correct_submission(session.current_slot), at=clock.tick()
        )
    return session


def advance_to_kind(session, kind, clock=None):
    """Solve slots perfectly until the current slot has the wanted kind."""
    clock = clock or TickClock()
    while session.current_slot.kind is not kind:
        engine.submit_answer(
            session, correct_submission(session.current_slot), at=clock.tick()
        )
    return clock
