import re
from collections import OrderedDict

import pytest

from alexcoh import _kernels

_CRITERIA: "OrderedDict[int, list[bool]]" = OrderedDict()
_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


@pytest.fixture(scope="session", autouse=True)
def _compiled_kernels():
    _kernels.warmup()


def pytest_runtest_logreport(report):
    m = _PATTERN.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA.setdefault(int(m.group(1)), []).append(report.outcome == "passed")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        ok = all(_CRITERIA[n])
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({sum(_CRITERIA[n])}/{len(_CRITERIA[n])} checks)")
