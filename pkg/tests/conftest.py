import pytest

from growthexp.curve import ParametrizedCurve
from growthexp.poly import MultiPoly, UniPoly

ACCEPTANCE_LINES = []


@pytest.fixture
def t():
    return UniPoly.identity("t")


@pytest.fixture
def cusp():
    t = UniPoly.identity("t")
    return ParametrizedCurve(("x", "y"), "t", (t**2, t**3))


@pytest.fixture
def xy():
    vs = ("x", "y")
    return MultiPoly.var("x", vs), MultiPoly.var("y", vs), MultiPoly.constant(1, vs)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
