from __future__ import annotations

import pytest

_CRITERIA = pytest.StashKey[dict]()


@pytest.fixture
def record_criterion(request):
    """Record ``criterion N: PASS/FAIL`` for the terminal summary."""
    results = request.config.stash.setdefault(_CRITERIA, {})

    def record(number: int, passed: bool, detail: str = "") -> None:
        results[number] = (passed, detail)
        print(f"criterion {number}: {'PASS' if passed else 'FAIL'}{'  ' + detail if detail else ''}")

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_CRITERIA, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        passed, detail = results[number]
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}"
        terminalreporter.write_line(f"{line}  {detail}" if detail else line)
