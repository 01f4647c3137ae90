import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from richfca.figures import figure1, figure7  # noqa: E402

from _oracles import Ctx  # noqa: E402

FIG1_ROWS = [".XX.X", ".X.XX", "XX.X.", "X.XX.", "X...X"]
FIG7_ROWS = ["..XXXX", "XX..XX", "XXXX..", ".X.X.X", "X.X.X."]


@pytest.fixture
def fig1():
    return figure1()


@pytest.fixture
def fig7():
    return figure7()


@pytest.fixture
def fig1_oracle():
    return Ctx.from_rows(FIG1_ROWS, list("ghijk"), list("mnopq"))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config._acceptance = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    crit = getattr(report, "criterion", None)
    if crit is None:
        return
    results = report.config_acceptance
    number, title = crit
    ok, seconds, _ = results.get(number, (True, 0.0, title))
    results[number] = (ok and report.passed, seconds + report.duration, title)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        report.criterion = tuple(marker.args)
        report.config_acceptance = item.config._acceptance


def pytest_terminal_summary(terminalreporter, config):
    results = config._acceptance
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        ok, seconds, title = results[number]
        terminalreporter.write_line(
            f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}  ({seconds:.1f}s)")
