import pytest

from zelisko.euclid import PolynomialsModP
from zelisko.residue import Modulus

_REPORT = []


def pytest_terminal_summary(terminalreporter):
    if _REPORT:
        terminalreporter.section("acceptance criteria")
        for line in _REPORT:
            terminalreporter.write_line(line)


@pytest.fixture
def report():
    """Record one PASS/FAIL line for the terminal summary (and stdout)."""

    def emit(criterion, ok, detail):
        line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {detail}"
        _REPORT.append(line)
        print(line)
        return ok

    return emit


@pytest.fixture
def z36():
    return Modulus(36)


@pytest.fixture
def z144():
    return Modulus(144)


@pytest.fixture
def z8():
    return Modulus(8)


@pytest.fixture
def f2():
    return PolynomialsModP(2)


@pytest.fixture
def f2_x4x(f2):
    # x^4 + x = x (x + 1) (x^2 + x + 1)
    return Modulus(f2.poly([0, 1, 0, 0, 1]), f2)
