import os
import random

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def seed_value() -> int:
    raw = os.environ.get("INJSPEC_SEED", "")
    return int(raw) if raw else 20240613


@pytest.fixture
def rng():
    return random.Random(seed_value())


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
