"""Prints one summary line per acceptance criterion after the run."""

import re

CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            if "test_acceptance.py" not in rep.nodeid:
                continue
            match = CRITERION.search(rep.nodeid.split("::")[-1])
            if not match:
                continue
            number = int(match.group(1))
            verdict = "pass" if status == "passed" else "fail"
            lines[number] = (f"ACCEPTANCE {number}: {verdict} — "
                             f"{match.group(2).replace('_', ' ')}")
    if lines:
        terminalreporter.write_line("")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
