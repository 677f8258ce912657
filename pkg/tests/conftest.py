"""Shared pytest hooks: print one summary line per acceptance check."""

import pytest


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    doc = (getattr(item, "function", None) and item.function.__doc__ or "").strip()
    report.acceptance_line = doc.splitlines()[0] if doc else item.name


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = []
    for status, word in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for rep in terminalreporter.stats.get(status, []):
            if "test_acceptance.py" not in rep.nodeid:
                continue
            if status == "passed" and rep.when != "call":
                continue
            label = getattr(rep, "acceptance_line", rep.nodeid)
            lines.append((rep.nodeid, f"[{word}] {label}"))
    if lines:
        terminalreporter.write_sep("=", "acceptance summary")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
