import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in mod.RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {name}  ({detail})")
