from pathlib import Path

import pytest

from bidicpp.bigraph import BiGraph

ROOT = Path(__file__).resolve().parent.parent


def graph(*tuples, vertices=()):
    """Shorthand: graph((1, 2, '>', '>'), ...)."""
    return BiGraph.from_tuples(tuples, vertices)


@pytest.fixture
def path_graph():
    return graph((1, 2, ">", ">"), (2, 3, ">", ">"))


@pytest.fixture
def triangle():
    return graph((1, 2, ">", ">"), (2, 3, ">", ">"), (3, 1, ">", ">"))


@pytest.fixture
def two_cycle():
    return graph((1, 2, ">", ">"), (1, 2, "<", "<"))
