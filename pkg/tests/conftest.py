import pytest

ACCEPTANCE_LINES = []

from reacalc.symmetry import dj_symmetry, flip, superflip


@pytest.fixture(scope="session")
def dj2():
    return dj_symmetry(2)


@pytest.fixture(scope="session")
def dj3():
    return dj_symmetry(3)


@pytest.fixture(scope="session")
def flip2():
    return flip(2)


@pytest.fixture(scope="session")
def sflip11():
    return superflip(1, 1)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda x: int(x.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
