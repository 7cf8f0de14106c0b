import pytest

from memory_dominoes.counts import DominoTable

# The displayed matrices for k = 0..3: rows index v, columns index h, and
# entries below the anti-diagonal are zero.
PAPER_MATRICES = {
    0: [[1]],
    1: [[0, 0], [1, 0]],
    2: [[1, 0, 1], [0, 0, 0], [1, 0, 0]],
    3: [[2, 4, 2, 0], [4, 0, 2, 0], [0, 0, 0, 0], [1, 0, 0, 0]],
}


@pytest.fixture(scope="session")
def table50():
    return DominoTable.from_series(50)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
