_acceptance_lines: list[str] = []


def record_acceptance(line: str) -> None:
    """Collect a criterion result line for the end-of-session report."""
    print(line)
    _acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
