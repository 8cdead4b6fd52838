import pytest


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def record(request):
    """record(criterion, passed, detail): one summary line for the acceptance report."""
    lines = request.config._acceptance_lines

    def _record(criterion, passed, detail=""):
        line = f"criterion {criterion}: {'PASS' if passed else 'FAIL'}  {detail}".rstrip()
        lines.append(line)
        print(line)

    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
