"""Player security profiles: the three configured question/answer entries a
session's recognition and recall challenges are built from."""

import json
from dataclasses import dataclass, field
from pathlib import Path

from .content import BANK_SIZE, IMAGES_PER_CHALLENGE, SecurityQuestion, normalize_answer
from .errors import AnswerTooLong, EmptyWordList, TooManyQuestions, UnknownQuestion
from .rng import substream

REQUIRED_ENTRIES = 3

PROFILE_VERSION = 1


@dataclass
class ProfileEntry:
    question_id: str
    answer: str
    images: list[str]
    verbal_cues: list[str]

    def to_dict(self) -> dict:
        return {
            "question": self.question_id,
            "answer": self.answer,
            "images": list(self.images),
            "cues": list(self.verbal_cues),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ProfileEntry":
        return cls(
            question_id=data["question"],
            answer=data["answer"],
            images=list(data["images"]),
            verbal_cues=list(data["cues"]),
        )


@dataclass
class SecurityProfile:
    player_id: str
    entries: list[ProfileEntry] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return len(self.entries) == REQUIRED_ENTRIES

    def entry(self, question_id: str) -> ProfileEntry:
        for e in self.entries:
            if e.question_id == question_id:
                return e
        raise KeyError(question_id)

    def to_dict(self) -> dict:
        return {
            "version": PROFILE_VERSION,
            "player": self.player_id,
            "entries": [e.to_dict() for e in self.entries],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SecurityProfile":
        return cls(
            player_id=data["player"],
            entries=[ProfileEntry.from_dict(e) for e in data["entries"]],
        )


def set_answer(
    profile: SecurityProfile,
    catalog: list[SecurityQuestion],
    question_id: str,
    raw_answer: str,
    images: list[str],
    cues: list[str],
) -> SecurityProfile:
    """Store one configured question with its normalized answer and cue media.

    Setting the same question again replaces the earlier entry; a fourth
    distinct question is rejected because sessions schedule exactly three.
    """
    if question_id not in {q.question_id for q in catalog}:
        raise UnknownQuestion(f"question {question_id!r} is not in the catalog")
    answer = normalize_answer(raw_answer)
    if len(answer) > BANK_SIZE:
        raise AnswerTooLong(
            f"answer has {len(answer)} letters, the bank holds {BANK_SIZE}"
        )
    if len(images) != IMAGES_PER_CHALLENGE or len(cues) != IMAGES_PER_CHALLENGE:
        raise ValueError("an entry needs exactly 4 images and 4 verbal cues")
    entry = ProfileEntry(question_id=question_id, answer=answer, images=list(images), verbal_cues=list(cues))
    existing = [e for e in profile.entries if e.question_id != question_id]
    if len(existing) >= REQUIRED_ENTRIES:
        raise TooManyQuestions(f"profile already has {REQUIRED_ENTRIES} questions configured")
    profile.entries = existing + [entry]
    return profile


def generate_answer(words: list[str], seed: int) -> str:
    """Draw a system-generated answer uniformly from `words`; deterministic per seed."""
    if not words:
        raise EmptyWordList("word list is empty")
    normalized = [normalize_answer(w) for w in words]
    for word in normalized:
        if len(word) > BANK_SIZE:
            raise AnswerTooLong(f"word {word!r} exceeds {BANK_SIZE} letters")
    rng = substream(seed, "generate-answer")
    return rng.choice(normalized)


def save_profile(profile: SecurityProfile, path: str | Path):
    Path(path).write_text(
        json.dumps(profile.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def load_profile(path: str | Path) -> SecurityProfile:
    return SecurityProfile.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
