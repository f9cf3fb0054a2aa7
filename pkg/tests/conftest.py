import itertools

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from treeparams.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# lines recorded by the acceptance module, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph([str(i) for i in range(n)], [p for p, keep in zip(pairs, chosen) if keep])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def tmp(tmp_path):
    return tmp_path
