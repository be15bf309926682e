import pytest

_ACCEPTANCE: list[tuple[int, str, str, float]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        number, title = mark.args
        _ACCEPTANCE.append((number, title, rep.outcome.upper(), rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome, duration in sorted(_ACCEPTANCE):
        status = "PASS" if outcome == "PASSED" else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {title}  ({duration:.2f} s)")
