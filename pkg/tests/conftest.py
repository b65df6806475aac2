import pytest

_results: list[tuple[str, str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(cid, text): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.skipped):
        status = "SKIP" if report.skipped else ("PASS" if report.passed else "FAIL")
        param = item.callspec.id if hasattr(item, "callspec") else ""
        _results.append((str(marker.args[0]), status, marker.args[1], param))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for cid, status, text, param in sorted(_results, key=lambda r: (int(r[0]), r[3])):
        suffix = f" [{param}]" if param else ""
        terminalreporter.write_line(f"{status} criterion {cid}{suffix}: {text}")
