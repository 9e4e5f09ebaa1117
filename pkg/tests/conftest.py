"""Collects acceptance outcomes and prints one line per criterion at the end of the run."""

import pytest

_results = {}


@pytest.fixture(autouse=True)
def _criterion_properties(request, record_property):
    mark = request.node.get_closest_marker("acceptance")
    if mark and mark.args:
        record_property("criterion", mark.args[0])
        record_property("title", mark.args[1])


def pytest_runtest_logreport(report):
    if "acceptance" not in report.keywords:
        return
    if report.when == "call" or report.outcome != "passed":
        key = report.nodeid
        if key not in _results or report.outcome != "passed":
            _results[key] = report


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for nodeid, rep in sorted(_results.items(), key=lambda kv: _number(kv[1])):
        verdict = "PASS" if rep.outcome == "passed" else "FAIL"
        tr.write_line(f"criterion {_number(rep):>2}: {verdict}  {_title(rep)}")


def _user_property(rep, name, default):
    for k, v in rep.user_properties:
        if k == name:
            return v
    return default


def _number(rep):
    return _user_property(rep, "criterion", 0)


def _title(rep):
    return _user_property(rep, "title", rep.nodeid)
