criterion_lines: list[str] = []


def pytest_terminal_summary(terminalreporter):
    """Print one PASS/FAIL line per acceptance criterion at the end of the run."""
    if criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in criterion_lines:
            terminalreporter.write_line(line)
