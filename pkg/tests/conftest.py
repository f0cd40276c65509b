import numpy as np
import pytest

from mixrev.gates import gate


@pytest.fixture
def and_c():
    return gate("AND_C")


def basis(n, i):
    v = np.zeros(n, dtype=complex)
    v[i] = 1
    return v


ACCEPTANCE: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def criterion(request):
    """Record the pass/fail outcome of one acceptance criterion."""
    marker = request.node.get_closest_marker("criterion")
    number, title = marker.args
    ACCEPTANCE[number] = (title, False)
    yield
    ACCEPTANCE[number] = (title, True)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {number:2d} {title}")
