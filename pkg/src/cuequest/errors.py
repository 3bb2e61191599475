"""Exception types shared across the engine, content, analytics and service layers."""


class GameError(Exception):
    """Base class for all domain errors. `code` is stable and machine-readable."""

    code = "game_error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.__class__.__name__)
        self.message = message or self.__class__.__name__


# -- content / pack ----------------------------------------------------------

class EmptyAnswer(GameError):
    code = "empty_answer"


class NonAlphabetic(GameError):
    code = "non_alphabetic"


class AnswerTooLong(GameError):
    code = "answer_too_long"


class InsufficientDistractors(GameError):
    code = "insufficient_distractors"


class PackInvalid(GameError):
    code = "pack_invalid"

    def __init__(self, message: str = "", violations: list[str] | None = None):
        super().__init__(message)
        self.violations = violations or []


# -- profile -----------------------------------------------------------------

class UnknownQuestion(GameError):
    code = "unknown_question"


class TooManyQuestions(GameError):
    code = "too_many_questions"


class EmptyWordList(GameError):
    code = "empty_word_list"


class ProfileIncomplete(GameError):
    code = "profile_incomplete"


# -- engine ------------------------------------------------------------------

class PoolTooSmall(GameError):
    code = "pool_too_small"


class SessionNotActive(GameError):
    code = "session_not_active"


class SessionNotCompleted(GameError):
    code = "session_not_completed"


class OptionOutOfRange(GameError):
    code = "option_out_of_range"


class NotComposableFromBank(GameError):
    code = "not_composable_from_bank"


class InsufficientPoints(GameError):
    code = "insufficient_points"


class NoHintForRecognition(GameError):
    code = "no_hint_for_recognition"


class NothingToReveal(GameError):
    code = "nothing_to_reveal"


class CueAlreadyShown(GameError):
    code = "cue_already_shown"


# -- analytics ---------------------------------------------------------------

class EmptyCohort(GameError):
    code = "empty_cohort"


class ItemOutOfRange(GameError):
    code = "item_out_of_range"


class ScoreOutOfRange(GameError):
    code = "score_out_of_range"


class MalformedLog(GameError):
    code = "malformed_log"
