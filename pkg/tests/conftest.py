import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent))

from domrec import Graph, is_connected  # noqa: E402

CORPUS_SEED = 20260808


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    while True:
        g = random_graph(rng, n, rng.uniform(0.25, 0.75))
        if is_connected(g):
            return g


def connected_corpus(count: int, n_min: int = 4, n_max: int = 9) -> list[Graph]:
    rng = random.Random(CORPUS_SEED)
    return [
        random_connected_graph(rng, rng.randint(n_min, n_max))
        for _ in range(count)
    ]


@pytest.fixture(scope="session")
def corpus200() -> list[Graph]:
    return connected_corpus(200)


@pytest.fixture(scope="session")
def corpus50() -> list[Graph]:
    return connected_corpus(50)
