import re

_CRITERIA = {}
_NOTES = {}
_NAME = re.compile(r"test_criterion_(\d+)")


def pytest_runtest_logreport(report):
    m = _NAME.search(report.nodeid)
    if not m or "test_acceptance.py" not in report.nodeid:
        return
    key = int(m.group(1))
    if hasattr(report, "wasxfail"):
        if report.when == "call" or report.skipped:
            _NOTES[key] = f"literal reading fails as recorded ({report.wasxfail})"
        return
    if report.when == "call" or report.failed:
        _CRITERIA.setdefault(key, True)
        _CRITERIA[key] &= report.passed


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA):
        line = f"criterion {key}: {'PASS' if _CRITERIA[key] else 'FAIL'}"
        if key in _NOTES:
            line += f"  [{_NOTES[key]}]"
        terminalreporter.write_line(line)
