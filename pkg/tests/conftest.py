"""Shared fixtures: small named graphs and the oracle corpus."""

import random

import networkx as nx
import pytest

from fatchroma.models import Graph

RANDOM_CORPUS_SEED = 20240601
RANDOM_CORPUS_SIZE = 200


def to_graph(nx_graph: nx.Graph) -> Graph:
    """Relabel a networkx graph to 0..n-1 in sorted node order."""
    index = {node: i for i, node in enumerate(sorted(nx_graph.nodes()))}
    return Graph.from_edges(len(index), [(index[u], index[v]) for u, v in nx_graph.edges()])


def atlas_graphs() -> list[Graph]:
    """Every graph on 1 to 6 vertices up to isomorphism."""
    return [to_graph(h) for h in nx.graph_atlas_g() if 1 <= h.number_of_nodes() <= 6]


def random_graphs(count: int = RANDOM_CORPUS_SIZE, seed: int = RANDOM_CORPUS_SEED) -> list[Graph]:
    """Seeded G(n, m) samples on 7 to 9 vertices."""
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        n = rng.randint(7, 9)
        m = rng.randint(0, n * (n - 1) // 2)
        graphs.append(to_graph(nx.gnm_random_graph(n, m, seed=rng.randrange(2**31))))
    return graphs


@pytest.fixture
def triangle() -> Graph:
    return Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def path3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def k4() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def two_triangles() -> Graph:
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
