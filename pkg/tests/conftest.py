def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criteria of the package")


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion" in report.nodeid:
        label = report.nodeid.rsplit("[", 1)[-1].rstrip("]")
        _results.append((label, report.outcome))


_results = []


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in _results:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {label}")
