import pytest

_verdicts: list[tuple[str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        note = getattr(item, "criterion_note", "")
        _verdicts.append(("PASS" if rep.passed else "FAIL", marker.args[0], note))


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for mark, label, note in _verdicts:
        terminalreporter.write_line(f"[{mark}] {label}" + (f"  ({note})" if note else ""))
