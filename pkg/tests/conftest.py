import pytest

from dilog_zeros.polylog import find_polylog_zeros

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def spiral_neg():
    return find_polylog_zeros(complex(-10, -44), jmax=139)


@pytest.fixture(scope="session")
def spiral_pos():
    return find_polylog_zeros(complex(10, 44))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
