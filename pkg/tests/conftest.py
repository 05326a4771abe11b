import os

import pytest
from hypothesis import HealthCheck, settings

from condogame.graph import LabeledGraph, canonical_labels
from condogame.verify import CONNECTED_LE7, TREES_LE10, Corpus

settings.register_profile("default", max_examples=100, deadline=None)
settings.register_profile("ci", max_examples=400, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def connected7():
    return Corpus.builtin(CONNECTED_LE7)


@pytest.fixture(scope="session")
def connected6():
    return Corpus.builtin(CONNECTED_LE7, max_order=6)


@pytest.fixture(scope="session")
def trees10():
    return Corpus.builtin(TREES_LE10)


def labeled(g):
    return LabeledGraph(g, canonical_labels(g.n))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
