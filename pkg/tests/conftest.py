import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from zfthrottle.digraph import Digraph, UndirectedGraph  # noqa: E402

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=1500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


ACCEPTANCE_LINES = pytest.StashKey[list]()


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", help="run the n <= 14 conjecture sweep")


@pytest.fixture
def extended(request):
    return request.config.getoption("--extended") or os.environ.get("ZFTHROTTLE_EXTENDED") == "1"


@st.composite
def digraphs(draw, min_n=0, max_n=6, oriented=False):
    n = draw(st.integers(min_n, max_n))
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            s = draw(st.integers(0, 2 if oriented else 3))
            if s & 1:
                rows[i] |= 1 << j
            if s & 2:
                rows[j] |= 1 << i
    return Digraph(n, tuple(rows))


@st.composite
def graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return UndirectedGraph.from_edges(n, [p for p, k in zip(pairs, keep) if k])
