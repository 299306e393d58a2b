import sys
from pathlib import Path

import pytest

from msmetric.ground import GroundSpace

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def line():
    return GroundSpace.euclidean(1)


@pytest.fixture
def plane():
    return GroundSpace.euclidean(2)


@pytest.fixture
def discrete():
    return GroundSpace.discrete("e")


# test name -> (passed, detail) for tests/test_acceptance.py
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and (rep.when == "call" or rep.failed):
        detail = dict(item.user_properties).get("detail", "")
        ACCEPTANCE[item.name] = (rep.passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
