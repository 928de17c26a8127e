import os
import sys

import pytest
from hypothesis import settings

from perrank import Matrix, SignedGraph

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def B():
    return Matrix([[0, 0, 1, -1], [0, 0, 1, 1], [1, 1, 0, 1], [-1, 1, 1, 0]])


@pytest.fixture
def example_gen():
    return Matrix([[0, 1], [0, 0]])


@pytest.fixture
def triangle():
    return SignedGraph(3, [(0, 1, 1), (0, 2, 1), (1, 2, 1)])


@pytest.fixture
def neg_triangle():
    return SignedGraph(3, [(0, 1, 1), (0, 2, 1), (1, 2, -1)])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
