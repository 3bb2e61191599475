"""Challenge content: answer normalization, letter banks, recognition options,
and the challenge pack format.

A pack is a single JSON document shipping the standard challenges, the
distractor word list used for recognition options, and the security question
catalog. Image files live next to it under ``assets/<challenge-id>/`` and are
never decoded here; the engine only passes their paths through to clients.
"""

import json
import logging
import string
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .errors import (
    AnswerTooLong,
    EmptyAnswer,
    InsufficientDistractors,
    NonAlphabetic,
    PackInvalid,
)
from .rng import substream

log = logging.getLogger(__name__)

BANK_SIZE = 12
IMAGES_PER_CHALLENGE = 4
MIN_STANDARD_CHALLENGES = 7
MIN_DISTRACTORS = 100

PACK_FIELDS = {"id", "version", "challenges", "distractors", "questions"}

ALPHABET = string.ascii_uppercase


def normalize_answer(raw: str) -> str:
    """Canonicalize a raw answer to a single uppercase A-Z word.

    Surrounding whitespace is trimmed and internal spaces/hyphens are removed
    ("New-York" -> "NEWYORK"); anything else non-alphabetic is rejected.
    """
    trimmed = raw.strip()
    if not trimmed:
        raise EmptyAnswer("answer is empty")
    word = trimmed.replace(" ", "").replace("-", "").upper()
    if not word:
        raise EmptyAnswer("answer is empty after removing separators")
    if any(ch not in ALPHABET for ch in word):
        raise NonAlphabetic(f"answer {raw!r} contains non-alphabetic characters")
    return word


@dataclass
class LetterBank:
    """The 12-letter multiset a player composes guesses from.

    ``letters`` keeps the shuffled order; ``consumed`` marks cells spent by
    letter-reveal hints. Both lists always have exactly ``BANK_SIZE`` entries.
    """

    letters: list[str]
    consumed: list[bool] = field(default_factory=list)

    def __post_init__(self):
        if not self.consumed:
            self.consumed = [False] * len(self.letters)

    def available(self) -> list[str]:
        return [l for l, used in zip(self.letters, self.consumed) if not used]

    def consume_letter(self, letter: str) -> int:
        """Mark the first available cell holding `letter` as consumed."""
        for i, (l, used) in enumerate(zip(self.letters, self.consumed)):
            if l == letter and not used:
                self.consumed[i] = True
                return i
        raise ValueError(f"no available {letter!r} cell in bank")

    def to_dict(self) -> dict:
        return {"letters": list(self.letters), "consumed": list(self.consumed)}

    @classmethod
    def from_dict(cls, data: dict) -> "LetterBank":
        return cls(letters=list(data["letters"]), consumed=list(data["consumed"]))


def build_letter_bank(answer: str, seed: int, *, bank_size: int = BANK_SIZE) -> LetterBank:
    """Build the letter bank for `answer`: its letters plus uniform random
    distractor letters, shuffled. Deterministic per (answer, seed)."""
    if len(answer) > bank_size:
        raise AnswerTooLong(f"answer has {len(answer)} letters, bank holds {bank_size}")
    rng = substream(seed, "bank", answer)
    letters = list(answer)
    letters += [rng.choice(ALPHABET) for _ in range(bank_size - len(answer))]
    rng.shuffle(letters)
    return LetterBank(letters=letters)


def build_recognition_options(
    answer: str, distractors: list[str], n: int, seed: int
) -> list[str]:
    """Pick the answer plus ``n - 1`` distinct distractor words and shuffle.

    Distractors within two letters of the answer's length are preferred so
    the wrong options stay plausible; the pool widens only when the
    length-matched candidates run out.
    """
    candidates = sorted({normalize_answer(w) for w in distractors} - {answer})
    if len(candidates) < n - 1:
        raise InsufficientDistractors(
            f"need {n - 1} distractors distinct from the answer, have {len(candidates)}"
        )
    rng = substream(seed, "options", answer)
    near = [w for w in candidates if abs(len(w) - len(answer)) <= 2]
    far = [w for w in candidates if abs(len(w) - len(answer)) > 2]
    rng.shuffle(near)
    rng.shuffle(far)
    picked = (near + far)[: n - 1]
    options = [answer] + picked
    rng.shuffle(options)
    return options


@dataclass
class StandardChallenge:
    """One four-pictures puzzle: the relating word plus a verbal cue per image."""

    challenge_id: str
    answer: str
    images: list[str]
    verbal_cues: list[str]

    def to_dict(self) -> dict:
        return {
            "id": self.challenge_id,
            "answer": self.answer,
            "images": list(self.images),
            "cues": list(self.verbal_cues),
        }


@dataclass
class SecurityQuestion:
    question_id: str
    prompt: str


@dataclass
class ChallengePack:
    pack_id: str
    version: int
    challenges: list[StandardChallenge]
    distractors: list[str]
    questions: list[SecurityQuestion]

    def challenge(self, challenge_id: str) -> StandardChallenge:
        for c in self.challenges:
            if c.challenge_id == challenge_id:
                return c
        raise KeyError(challenge_id)

    def question(self, question_id: str) -> SecurityQuestion:
        for q in self.questions:
            if q.question_id == question_id:
                return q
        raise KeyError(question_id)


@dataclass
class ValidationReport:
    """Outcome of pack validation; empty `violations` means the pack is loadable."""

    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, message: str):
        self.violations.append(message)


def validate_pack(pack: ChallengePack) -> ValidationReport:
    """Check every pack invariant; the report names offending challenge ids."""
    report = ValidationReport()
    if len(pack.challenges) < MIN_STANDARD_CHALLENGES:
        report.add(
            f"pool below {MIN_STANDARD_CHALLENGES}: pack has {len(pack.challenges)} standard challenges"
        )
    seen_ids: set[str] = set()
    for c in pack.challenges:
        if c.challenge_id in seen_ids:
            report.add(f"duplicate challenge id {c.challenge_id!r}")
        seen_ids.add(c.challenge_id)
        if len(c.images) != IMAGES_PER_CHALLENGE:
            report.add(f"challenge {c.challenge_id!r} has {len(c.images)} images, expected 4")
        if len(c.verbal_cues) != IMAGES_PER_CHALLENGE:
            report.add(f"challenge {c.challenge_id!r} has {len(c.verbal_cues)} cues, expected 4")
        try:
            normalized = normalize_answer(c.answer)
            if normalized != c.answer:
                report.add(f"challenge {c.challenge_id!r} answer is not normalized")
            if len(normalized) > BANK_SIZE:
                report.add(f"challenge {c.challenge_id!r} answer exceeds {BANK_SIZE} letters")
        except (EmptyAnswer, NonAlphabetic) as exc:
            report.add(f"challenge {c.challenge_id!r} answer invalid: {exc.message}")
    if len(pack.distractors) < MIN_DISTRACTORS:
        report.add(
            f"distractor list below {MIN_DISTRACTORS}: pack has {len(pack.distractors)} words"
        )
    for word in pack.distractors:
        try:
            normalize_answer(word)
        except (EmptyAnswer, NonAlphabetic) as exc:
            report.add(f"distractor {word!r} invalid: {exc.message}")
    seen_q: set[str] = set()
    for q in pack.questions:
        if q.question_id in seen_q:
            report.add(f"duplicate question id {q.question_id!r}")
        seen_q.add(q.question_id)
        if not q.prompt.strip():
            report.add(f"question {q.question_id!r} has an empty prompt")
    return report


def pack_from_dict(data: dict) -> ChallengePack:
    """Parse a pack document. Unknown top-level fields are rejected so the
    schema stays versionable."""
    unknown = set(data) - PACK_FIELDS
    if unknown:
        raise PackInvalid(f"unknown pack fields: {sorted(unknown)}")
    missing = PACK_FIELDS - set(data)
    if missing:
        raise PackInvalid(f"missing pack fields: {sorted(missing)}")
    try:
        challenges = [
            StandardChallenge(
                challenge_id=c["id"],
                answer=c["answer"],
                images=list(c["images"]),
                verbal_cues=list(c["cues"]),
            )
            for c in data["challenges"]
        ]
        questions = [
            SecurityQuestion(question_id=q["id"], prompt=q["prompt"])
            for q in data["questions"]
        ]
    except (KeyError, TypeError) as exc:
        raise PackInvalid(f"malformed pack entry: {exc}") from exc
    return ChallengePack(
        pack_id=data["id"],
        version=int(data["version"]),
        challenges=challenges,
        distractors=list(data["distractors"]),
        questions=questions,
    )


def load_pack(path: str | Path, *, validate: bool = True) -> ChallengePack:
    """Load and (by default) validate a pack file.

    Answers are stored in plaintext; a warning reminds operators this format
    is meant for desk-scale deployments only.
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise PackInvalid(f"cannot read pack {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise PackInvalid(f"pack {path} is not valid JSON: {exc}") from exc
    pack = pack_from_dict(data)
    log.warning("pack %s stores challenge answers in plaintext", path)
    if validate:
        report = validate_pack(pack)
        if not report.ok:
            raise PackInvalid(
                f"pack {path} failed validation", violations=report.violations
            )
    return pack


def default_pack_path() -> Path:
    """Path of the pack bundled with the package."""
    return Path(__file__).parent / "data" / "pack.json"


def is_composable(word: str, available_letters: list[str], extra_letters: str = "") -> bool:
    """True when `word` can be spelled from the available bank cells plus any
    already-revealed letters."""
    budget = Counter(available_letters) + Counter(extra_letters)
    return not (Counter(word) - budget)
