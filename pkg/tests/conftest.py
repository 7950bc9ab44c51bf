import numpy as np
import pytest

from trigspline import EXAMPLE_DATA, make_grid, sample_values

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture
def example_samples():
    def make(kind=0):
        return sample_values(make_grid(kind, 9), EXAMPLE_DATA)

    return make


@pytest.fixture
def sweep():
    return np.linspace(0.0, 2.0 * np.pi, 1000, endpoint=False)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")


@pytest.fixture
def record():
    """Log one acceptance line and print it immediately."""

    def log(name, ok, detail):
        ACCEPTANCE_RESULTS.append((name, bool(ok), detail))
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
        return bool(ok)

    return log
