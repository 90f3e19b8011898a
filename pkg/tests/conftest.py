import random

import pytest

from packedge.corpus import build_corpus, run_corpus
from packedge.families import (gen_k4, gen_leaf7, gen_leaf7_pair,
                               gen_petersen, gen_ring, gen_tietze)
from packedge.graph import build_graph


@pytest.fixture(scope="session")
def petersen():
    return gen_petersen()


@pytest.fixture(scope="session")
def tietze():
    return gen_tietze()


@pytest.fixture
def k4():
    return gen_k4()


@pytest.fixture
def leaf7():
    return gen_leaf7()


@pytest.fixture
def leaf7_pair():
    return gen_leaf7_pair()


@pytest.fixture
def dipole():
    return build_graph([(0, 1), (0, 1), (0, 1)])


@pytest.fixture
def prism():
    return build_graph([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                        (0, 3), (1, 4), (2, 5)])


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def corpus_report(corpus):
    return run_corpus(corpus)


def random_connected_graph(rng: random.Random, max_n: int = 30):
    """Random connected graph used by distance/bridge property tests."""
    n = rng.randint(2, max_n)
    edges = [(i, rng.randrange(i)) for i in range(1, n)]
    extra = rng.randint(0, n)
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.append((u, v))   # parallel edges welcome
    return build_graph(edges, vertices=range(n))
