"""cuequest: a serious game for learning strong, memorable answers to
security questions.

Players solve picture puzzles against a 12-letter bank, interleaved with
recognition and recall challenges built from their own configured security
answers; points, purchasable hints and milestone badges drive the economy.
"""

from .analytics import (
    aggregate,
    monthly_progress,
    session_metrics,
    sus_adjective,
    sus_score,
)
from .content import (
    ChallengePack,
    LetterBank,
    StandardChallenge,
    build_letter_bank,
    build_recognition_options,
    load_pack,
    normalize_answer,
    validate_pack,
)
from .engine import (
    ChallengeKind,
    GamePolicy,
    GameSession,
    HintKind,
    Outcome,
    Schedule,
    build_schedule,
    current_challenge,
    purchase_hint,
    session_summary,
    start_session,
    submit_answer,
)
from .profile import SecurityProfile, generate_answer, set_answer

__version__ = "0.1.0"

__all__ = [
    "ChallengeKind",
    "ChallengePack",
    "GamePolicy",
    "GameSession",
    "HintKind",
    "LetterBank",
    "Outcome",
    "Schedule",
    "SecurityProfile",
    "StandardChallenge",
    "aggregate",
    "build_letter_bank",
    "build_recognition_options",
    "build_schedule",
    "current_challenge",
    "generate_answer",
    "load_pack",
    "monthly_progress",
    "normalize_answer",
    "purchase_hint",
    "session_metrics",
    "session_summary",
    "set_answer",
    "start_session",
    "submit_answer",
    "sus_adjective",
    "sus_score",
    "validate_pack",
]
