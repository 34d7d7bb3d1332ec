import numpy as np
import pytest

from bodies import RECT, SQUARE, TRI345
from convexheart import make_polygon


@pytest.fixture
def square():
    return make_polygon(SQUARE)


@pytest.fixture
def rect():
    return make_polygon(RECT)


@pytest.fixture
def tri345():
    return make_polygon(TRI345)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            if rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                status = "PASS" if rep.passed else "FAIL"
                lines.append((props["criterion"], f"{status}  criterion {props['criterion']}: {props.get('summary', '')}"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
