import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from corpus import ACCEPTANCE_LINES, DATA, fixture  # noqa: E402

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def fork():
    return fixture("fork")


@pytest.fixture(scope="session")
def gmix():
    return fixture("mix")


@pytest.fixture(scope="session")
def fiber():
    return fixture("fiber")


@pytest.fixture(scope="session")
def gshift():
    return fixture("shift_e")


@pytest.fixture(scope="session")
def fshift():
    return fixture("shift_f")


@pytest.fixture(scope="session")
def chain4():
    return fixture("chain4")
