import pytest

from hyparr import arrangement as arr

XYZ = ["x", "y", "z"]


@pytest.fixture
def boolean():
    return arr.from_polynomial("x*y*z", XYZ)


@pytest.fixture
def braid():
    return arr.from_polynomial("(x-y)*(x-z)*(y-z)", XYZ)


@pytest.fixture
def a5():
    return arr.from_polynomial("x*y*z*(x+y)*(x+2*y+z)", XYZ)


@pytest.fixture
def a6():
    return arr.from_polynomial("x*y*(x+y)*(x+3*y+z)", XYZ)


@pytest.fixture
def a7():
    return arr.from_polynomial("z*(4*x+z)*(2*x+y)*(6*x+y+3*z)*(8*x+2*y+5*z)", XYZ)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
