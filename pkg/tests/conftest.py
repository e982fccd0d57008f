import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request, capsys):
    """Yield a recorder; prints one PASS/FAIL line for the criterion when the test ends."""
    state = {}

    def record(label, ok, detail=""):
        state.update(label=label, ok=ok, detail=detail)
        return ok

    yield record
    if state:
        line = f"{'PASS' if state['ok'] else 'FAIL'}  {state['label']}"
        if state["detail"]:
            line += f"  ({state['detail']})"
        ACCEPTANCE_LINES.append(line)
        with capsys.disabled():
            print(f"\n    {line}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
