import pytest

from regsynth.infix import validate_spec

ACCEPTANCE_LINES = []


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run long checks (e.g. the exact 0% error row)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


E1_P = ["1", "011", "1011", "11011"]
E1_N = ["", "10", "101", "0011"]
INTRO_P = ["10", "101", "100", "1010", "1011", "1000", "1001"]
INTRO_N = ["", "0", "1", "00", "11", "010"]
TABLE_P = ["00", "1101", "0001", "0111", "001", "1", "10", "1100", "111", "1010"]
TABLE_N = ["", "0", "0000", "0011", "01", "010", "011", "100", "1000", "1001", "11", "1110"]


@pytest.fixture
def e1():
    return validate_spec(E1_P, E1_N)


@pytest.fixture
def intro():
    return validate_spec(INTRO_P, INTRO_N)


@pytest.fixture
def table_spec():
    return validate_spec(TABLE_P, TABLE_N)
