from acceptance_reporting import RESULTS


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, desc, passed in sorted(RESULTS):
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{verdict} criterion {num:2d}: {desc}")
