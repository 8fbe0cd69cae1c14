import math

import numpy as np
import pytest

from betaskel import PointSet

_results: dict = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    num = next((m for m in report.keywords if m.startswith("criterion_")), None)
    if num is None:
        return
    ok = report.outcome == "passed"
    _results[num] = _results.get(num, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_results, key=lambda k: int(k.split("_")[1])):
        status = "PASS" if _results[key] else "FAIL"
        terminalreporter.write_line(f"criterion {key.split('_')[1]}: {status}")


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def random_pointset(seed: int, n: int) -> PointSet:
    return PointSet(np.random.default_rng(seed).random((n, 2)))


SQRT2 = math.sqrt(2.0)
