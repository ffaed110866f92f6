import pytest

_CRITERIA = {}


@pytest.fixture
def criterion():
    """Record an acceptance result: criterion(n, title, passed, detail)."""

    def record(n, title, passed, detail=""):
        _CRITERIA[n] = (title, bool(passed), detail)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, ok, detail = _CRITERIA[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n}. {title}: {detail}")
