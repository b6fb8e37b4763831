import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_results: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    crit = _criteria.get(report.nodeid)
    if crit:
        _results.setdefault(crit, []).append(report.passed)


_criteria: dict = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            _criteria[item.nodeid] = mark.args


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), outcomes in sorted(_results.items()):
        status = "PASS" if all(outcomes) else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {num}: {title}")
