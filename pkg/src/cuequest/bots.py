"""Headless bot players for testing and load generation.

Bots stand in for human participants: they drive real engine sessions and
leave behind event logs in exactly the format the live service writes, so the
analytics pipeline can be exercised end to end without people. A simulation
run is deterministic per seed, including its synthetic timestamps.
"""

import random
from dataclasses import dataclass, field
from datetime import datetime, timedelta, timezone

from . import engine
from .content import ChallengePack
from .engine import ChallengeKind, GamePolicy, GameSession, HintKind
from .profile import SecurityProfile
from .rng import substream

SIM_EPOCH = datetime(2026, 1, 1, tzinfo=timezone.utc)
SESSION_SPACING = timedelta(hours=1)


class SimClock:
    """Synthetic per-session clock: starts at a fixed offset from the epoch
    and advances a seeded number of seconds per action."""

    def __init__(self, start: datetime, rng: random.Random):
        self.now = start
        self.rng = rng

    def tick(self) -> datetime:
        self.now += timedelta(seconds=self.rng.randint(2, 20))
        return self.now


@dataclass
class BotSpec:
    """Which bot to run and with what parameters.

    `perfect` solves everything first try. `fallible` answers correctly with
    the given per-kind probability per attempt (capped at `max_wrong` misses
    per slot so a run always terminates). `hint-hungry` buys a verbal cue and
    every affordable letter reveal before answering.
    """

    name: str = "perfect"
    p_correct: dict[str, float] = field(
        default_factory=lambda: {"standard": 1.0, "recognition": 1.0, "recall": 1.0}
    )
    max_wrong: int = 3

    def validate(self):
        if self.name not in ("perfect", "fallible", "hint-hungry"):
            raise ValueError(f"unknown bot {self.name!r}")
        for kind, p in self.p_correct.items():
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"p_correct[{kind}] must be in [0, 1]")


def _wrong_option(slot, rng: random.Random) -> int:
    wrong = [i for i, option in enumerate(slot.options) if option != slot.answer]
    return rng.choice(wrong)


def _wrong_guess(slot, rng: random.Random) -> str:
    available = sorted(set(slot.bank.available()) | set(slot.revealed_letters()))
    guess = rng.choice(available)
    if guess == slot.answer:
        guess = "".join(available[:2])
    return guess


def _submit_wrong(session: GameSession, rng: random.Random, at: datetime):
    slot = session.current_slot
    if slot.kind is ChallengeKind.RECOGNITION:
        engine.submit_answer(session, _wrong_option(slot, rng), at=at)
    else:
        engine.submit_answer(session, _wrong_guess(slot, rng), at=at)


def _submit_correct(session: GameSession, at: datetime):
    slot = session.current_slot
    if slot.kind is ChallengeKind.RECOGNITION:
        engine.submit_answer(session, slot.options.index(slot.answer), at=at)
    else:
        engine.submit_answer(session, slot.answer, at=at)


def play_session(session: GameSession, spec: BotSpec, rng: random.Random, clock: SimClock):
    """Drive one session to completion according to the bot spec."""
    prefer_reveal = True
    while session.status is engine.SessionStatus.ACTIVE:
        slot = session.current_slot
        if spec.name == "hint-hungry" and slot.kind is not ChallengeKind.RECOGNITION:
            cost = session.policy.hint_cost
            while session.points >= cost:
                can_reveal = slot.revealed_count < len(slot.answer)
                unshown = [
                    i
                    for i in range(1, len(slot.verbal_cues) + 1)
                    if i not in slot.cues_shown
                ]
                if prefer_reveal and can_reveal:
                    engine.purchase_hint(session, HintKind.REVEAL_LETTER, at=clock.tick())
                    prefer_reveal = False
                elif unshown:
                    engine.purchase_hint(
                        session, HintKind.VERBAL_CUE, image=unshown[0], at=clock.tick()
                    )
                    prefer_reveal = True
                elif can_reveal:
                    engine.purchase_hint(session, HintKind.REVEAL_LETTER, at=clock.tick())
                else:
                    break
        if spec.name == "fallible":
            wrong_so_far = 0
            while True:
                p = spec.p_correct.get(slot.kind.value, 1.0)
                if rng.random() < p or wrong_so_far >= spec.max_wrong:
                    _submit_correct(session, clock.tick())
                    break
                _submit_wrong(session, rng, clock.tick())
                wrong_so_far += 1
        else:
            _submit_correct(session, clock.tick())


def run_simulation(
    pack: ChallengePack,
    profile: SecurityProfile,
    policy: GamePolicy,
    spec: BotSpec,
    sessions: int,
    seed: int,
) -> list[GameSession]:
    """Run `sessions` headless games. Session ids, seeds and timestamps all
    derive from `seed`, so two runs with the same arguments are identical."""
    spec.validate()
    if sessions < 1:
        raise ValueError("need at least one session")
    played = []
    for i in range(1, sessions + 1):
        session_seed = substream(seed, "sim-session", i).randrange(2**32)
        rng = substream(seed, "sim-bot", i)
        # the clock gets its own stream so bot decision draws (which vary by
        # bot kind) never shift the timestamps
        clock = SimClock(SIM_EPOCH + (i - 1) * SESSION_SPACING, substream(seed, "sim-clock", i))
        session = engine.start_session(
            player_id=f"bot-{i:04d}",
            pack=pack,
            profile=profile,
            policy=policy,
            seed=session_seed,
            session_id=f"sim-{i:04d}",
            at=clock.now,
        )
        play_session(session, spec, rng, clock)
        played.append(session)
    return played
