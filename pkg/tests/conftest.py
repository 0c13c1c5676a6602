import random

import pytest

from braidforge import garside

ACCEPTANCE_LINES = []


def record(criterion: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20240917)


@pytest.fixture(autouse=True)
def _fresh_summit_cache():
    garside.DEFAULT_CACHE.clear()
    yield
