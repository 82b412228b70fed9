import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE = {}


def texts(max_size=60, alphabet="abcdef"):
    return st.text(alphabet=alphabet, min_size=1, max_size=max_size)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and (report.when == "call" or report.failed):
        label = (item.function.__doc__ or item.name).strip().splitlines()[0]
        ACCEPTANCE[item.name] = (label, report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome, duration in ACCEPTANCE.values():
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {label}  ({duration:.2f}s)")
