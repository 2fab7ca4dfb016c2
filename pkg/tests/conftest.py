from collections import defaultdict

_results = defaultdict(list)

NAMES = {
    1: "main theorem over rank <= 7",
    2: "D' empty off LinearA",
    3: "Kostant dimension identity",
    4: "H^{1,1} criterion equivalence",
    5: "quadric worked example",
    6: "Grassmannian worked example",
    7: "sign-convention independence",
    8: "W^P cross-enumeration",
}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    n = report.user_properties and dict(report.user_properties).get("criterion")
    if n:
        _results[n].append(report.passed)


def pytest_runtest_setup(item):
    m = item.get_closest_marker("criterion")
    if m:
        item.user_properties.append(("criterion", m.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        status = "PASS" if all(_results[n]) else "FAIL"
        terminalreporter.write_line(f"criterion {n} {status}: {NAMES[n]}")
