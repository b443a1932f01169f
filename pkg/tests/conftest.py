import pytest

from cdgraph.constructors import build
from cdgraph.corpus import default_corpus

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def corpus_groups():
    """Every group of the shipped corpus, built once."""
    return [build(e.spec) for e in default_corpus()]


@pytest.fixture(scope="session")
def small_corpus_groups(corpus_groups):
    return [g for g in corpus_groups if g.order <= 200]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
