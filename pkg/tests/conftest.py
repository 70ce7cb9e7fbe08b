import _gatelog


def pytest_terminal_summary(terminalreporter):
    if _gatelog.lines:
        terminalreporter.section("acceptance criteria")
        for line in _gatelog.lines:
            terminalreporter.write_line(line)
