import pytest

from lagrangemin.specfun import PrecisionConfig


@pytest.fixture
def cfg50():
    return PrecisionConfig(digits=50)


@pytest.fixture
def cfg20():
    return PrecisionConfig(digits=20)


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def criterion(request):
    """Record a one-line PASS/FAIL verdict and fail the test if needed."""
    lines = request.config._acceptance_lines

    def record(name, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f" -- {detail}" if detail else "")
        lines.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
