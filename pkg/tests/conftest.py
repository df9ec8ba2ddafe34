import pytest

_CRITERIA = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call":
        number, title = marker.args
        _CRITERIA.append((number, title, rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    merged = {}
    for number, title, passed, duration in _CRITERIA:
        _, ok, total = merged.get(number, (title, True, 0.0))
        merged[number] = (title, ok and passed, total + duration)
    terminalreporter.section("acceptance criteria")
    for number, (title, passed, duration) in sorted(merged.items()):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  [{number:>2}] {title}  ({duration:.2f}s)")
