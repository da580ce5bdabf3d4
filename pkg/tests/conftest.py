import numpy as np
import pytest

from qtspace import discrete, from_subbasis
from qtspace.graph_spaces import Edge, Graph

ACCEPTANCE_RESULTS = []


@pytest.fixture
def sierpinski():
    return from_subbasis(["x", "y"], [["x"]])


@pytest.fixture
def single_edge():
    return Graph(("a", "b"), (Edge("e", ("a", "b")),))


@pytest.fixture
def two_edges():
    return Graph(("a", "b", "c", "d"), (Edge("e1", ("a", "b")), Edge("e2", ("c", "d"))))


@pytest.fixture
def discrete2():
    return discrete(["x", "y"])


@pytest.fixture
def cup():
    """|00> + |11> as a rank-2 tensor."""
    return np.eye(2, dtype=complex)


@pytest.fixture
def cap():
    return np.eye(2, dtype=complex)


@pytest.fixture
def crossing():
    """Axis exchange: R[a, b, c, d] = delta(a, d) delta(b, c)."""
    r = np.zeros((2, 2, 2, 2), dtype=complex)
    for a in range(2):
        for b in range(2):
            r[a, b, b, a] = 1
    return r


@pytest.fixture
def record():
    """Collect a pass/fail line for the acceptance summary."""

    def _record(name, passed, detail=""):
        ACCEPTANCE_RESULTS.append((name, passed, detail))

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE_RESULTS:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {name}" + (f"  ({detail})" if detail else ""))

