"""Shared pytest hooks: a one-line verdict per acceptance criterion."""

import pytest

_ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or item.path.name != "test_acceptance.py":
        return
    doc = item.function.__doc__ or item.name
    label = doc.strip().splitlines()[0].rstrip(".")
    if report.passed:
        status = "PASS"
    elif report.skipped:
        status = "SKIP"
    else:
        status = "FAIL"
    _ACCEPTANCE.append((label, status, report.duration))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for label, status, duration in _ACCEPTANCE:
        terminalreporter.write_line(f"[{status}] {label} ({duration:.2f}s)")
