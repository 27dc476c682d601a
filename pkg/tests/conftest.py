import pytest

from stirnum import stirling

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def fresh_tables():
    stirling.clear_tables()
    yield
    stirling.clear_tables()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
