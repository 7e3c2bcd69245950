from pathlib import Path

import numpy as np
import pytest

from fracnet import OccurrenceMatrix

DATA = Path(__file__).parent / "data"

# authorship of four researchers on three papers (R1..R4 x P1..P3)
TOY = np.array([
    [1, 1, 0],
    [1, 0, 1],
    [1, 1, 0],
    [0, 0, 1],
])

ACCEPTANCE_LINES = []


@pytest.fixture
def toy():
    return OccurrenceMatrix(TOY)


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
