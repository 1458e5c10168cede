import random

import pytest

from revkara.gf2poly import parse_modulus

CRITERIA_RESULTS = []


@pytest.fixture
def rng():
    return random.Random(20190611)


@pytest.fixture
def m4():
    return parse_modulus("4,1,0")


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in CRITERIA_RESULTS:
        terminalreporter.write_line(line)
