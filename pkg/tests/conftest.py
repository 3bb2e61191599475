import logging

import pytest

from cuequest.content import default_pack_path, load_pack
from cuequest.engine import GamePolicy
from cuequest.profile import SecurityProfile, set_answer

logging.getLogger("cuequest.content").setLevel(logging.ERROR)

# populated by tests/test_acceptance.py; printed after the run so each
# acceptance criterion gets its own visible pass/fail line
acceptance_results: list[tuple[str, bool]] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_results:
        terminalreporter.write_line("")
        terminalreporter.write_line("acceptance criteria:")
        for name, ok in acceptance_results:
            terminalreporter.write_line(f"  {'PASS' if ok else 'FAIL'}  {name}")

# Answers deliberately absent from the pack's challenge answers and
# distractor list, so leak scans can treat any other appearance as a bug.
PROFILE_ANSWERS = {"q-pet": "PENGUIN", "q-street": "BICYCLE", "q-teacher": "VIOLIN"}


@pytest.fixture(scope="session")
def pack():
    return load_pack(default_pack_path())


@pytest.fixture()
def profile(pack):
    prof = SecurityProfile(player_id="tester")
    for question_id, answer in PROFILE_ANSWERS.items():
        set_answer(
            prof,
            pack.questions,
            question_id,
            answer,
            [f"assets/{question_id}/{i}.svg" for i in range(1, 5)],
            [f"cue {i} for {question_id}" for i in range(1, 5)],
        )
    return prof


@pytest.fixture()
def policy():
    return GamePolicy()
