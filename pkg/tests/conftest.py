import pytest

from support import ACCEPTANCE_LINES, load_golden


@pytest.fixture(scope="session")
def golden():
    return load_golden()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
