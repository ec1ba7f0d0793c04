import pytest

_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion reported in the summary")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    label = _labels.get(report.nodeid)
    if label is not None:
        _acceptance[label] = "PASS" if report.passed else "FAIL"


_labels = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark is not None:
            _labels[item.nodeid] = mark.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_acceptance, key=lambda s: int(s.split()[0][2:])):
        terminalreporter.write_line(f"[{_acceptance[label]}] {label}")
