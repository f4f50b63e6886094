import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from bckbench import CayleyTable, validate  # noqa: E402
from tables import TABLE1, TABLE2, TABLE3, TABLE4  # noqa: E402


@pytest.fixture
def t1():
    return validate(CayleyTable(TABLE1))


@pytest.fixture
def t2():
    return validate(CayleyTable(TABLE2))


@pytest.fixture
def t3():
    return validate(CayleyTable(TABLE3))


@pytest.fixture
def t4():
    return validate(CayleyTable(TABLE4))


# one PASS/FAIL line per acceptance criterion, printed after the run
_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1][len("test_criterion_"):]
    if report.failed:
        _criteria[name] = "FAIL"
    elif report.when == "call" and name not in _criteria:
        _criteria[name] = "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        num, _, label = name.partition("_")
        terminalreporter.write_line(f"criterion {int(num):2d} {label.replace('_', ' ')}: {_criteria[name]}")
