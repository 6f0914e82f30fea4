import os

# closure of every SubgroupSet is re-checked on construction
os.environ.setdefault("SUBCOUNT_CHECK_INVARIANTS", "1")

import pytest

ACCEPTANCE: list[tuple[int, bool, str]] = []


@pytest.fixture
def acceptance():
    def record(number: int, ok: bool, detail: str) -> bool:
        ACCEPTANCE.append((number, ok, detail))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
