import sys


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance gate's one-line-per-criterion results, which
    capture would otherwise hide for passing tests."""
    module = sys.modules.get("test_acceptance") or sys.modules.get(
        "tests.test_acceptance"
    )
    if module is None or not module.GATE_LINES:
        return
    terminalreporter.section("acceptance gate")
    for line in module.GATE_LINES:
        terminalreporter.write_line(line)
