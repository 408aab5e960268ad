import sys

import pytest

from symcube.lfunc import LFunction, required_terms, root_number
from symcube.modforms import eigenform


def make_lfunction(k, digits, twist=None):
    conductor = 1 if twist is None else twist.conductor**4
    L = LFunction(eigenform(k, required_terms(k, digits, conductor) + 16), twist)
    root_number(L, digits)
    return L


@pytest.fixture(scope="session")
def delta_l30():
    return make_lfunction(12, 30)


@pytest.fixture(scope="session")
def weight16_l30():
    return make_lfunction(16, 30)


def pytest_terminal_summary(terminalreporter):
    lines = {}
    for name, mod in list(sys.modules.items()):
        if name.endswith("test_acceptance"):
            lines.update(getattr(mod, "LINES", {}))
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])
