import pytest

from digraphgf.oracle import oracle_tables


@pytest.fixture(scope="session")
def oracle4():
    """Every selector tallied once over all digraphs with n <= 4."""
    return oracle_tables(4)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
