"""Acceptance bookkeeping: each criterion test records a verdict line that is
printed in the terminal summary, one line per criterion."""
import pytest

_VERDICTS = {}


@pytest.fixture
def criterion(request):
    marker = request.node.get_closest_marker("criterion")
    number, title = marker.args
    _VERDICTS.setdefault(number, [title, None, ""])

    def note(text):
        _VERDICTS[number][2] = text

    yield note


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    number, title = marker.args
    entry = _VERDICTS.setdefault(number, [title, None, ""])
    passed = report.passed
    entry[1] = passed if entry[1] is None else entry[1] and passed


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_VERDICTS):
        title, passed, note = _VERDICTS[number]
        tag = "PASS" if passed else "FAIL"
        line = f"[{tag}] criterion {number}: {title}"
        if note:
            line += f" ({note})"
        terminalreporter.write_line(line)
