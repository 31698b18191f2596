import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from bmcycles.rootdata import build_root_datum  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def gl1():
    return build_root_datum("GL1")


@pytest.fixture(scope="session")
def gl2():
    return build_root_datum("GL2")


@pytest.fixture(scope="session")
def gl3():
    return build_root_datum("GL3")


_criteria = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid or report.when != "call" and not report.failed:
        return
    name = report.nodeid.split("::")[-1]
    if name.startswith("test_criterion_"):
        key = int(name.split("_")[2])
        if report.when == "call" or report.failed:
            _criteria[key] = (report.outcome, name)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_criteria):
        outcome, name = _criteria[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if outcome == 'passed' else 'FAIL'}  ({name})")
