import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ginlab import Ring  # noqa: E402

ACCEPTANCE = {}


def record(number, title, passed):
    ACCEPTANCE[number] = (title, passed)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, passed = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number:>2}. {title}")


@pytest.fixture
def xyz():
    return Ring(("x", "y", "z"))


@pytest.fixture
def xy():
    return Ring(("x", "y"))
