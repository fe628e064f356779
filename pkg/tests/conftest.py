import pytest

ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record one acceptance line: call with (number, ok, detail)."""
    def record(number, ok, detail):
        ACCEPTANCE.append((number, ok, detail))
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(ACCEPTANCE, key=lambda row: row[0]):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
