"""Collects per-criterion outcomes from tests marked ``acceptance(k, title)``
and prints one PASS/FAIL line per criterion at the end of the run."""

from __future__ import annotations

import pytest

_results: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion covered by a test")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark is not None:
            number, title = mark.args
            _results.setdefault(number, {"title": title, "outcomes": []})


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    failed = report.failed
    done = report.when == "call" or (report.when == "setup" and (report.failed or report.skipped))
    if failed or done:
        _results[mark.args[0]]["outcomes"].append("FAIL" if failed else report.outcome.upper())


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        entry = _results[number]
        outs = entry["outcomes"]
        if not outs:
            status = "NOT RUN"
        elif "FAIL" in outs:
            status = "FAIL"
        elif all(o == "PASSED" for o in outs):
            status = "PASS"
        else:
            status = "SKIPPED"
        terminalreporter.write_line(f"criterion {number:>2}: {status:<7} {entry['title']}")
