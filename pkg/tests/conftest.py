import numpy as np
import pytest

from ritzrelu import make_grid, sine_problem

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def grid():
    return make_grid(250)


@pytest.fixture(scope="session")
def problem():
    return sine_problem(3)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
