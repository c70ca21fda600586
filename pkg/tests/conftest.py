import random
from typing import Iterable, List

import networkx as nx
import pytest

from fourtree.core.graph import Graph, build_graph, find_triangle
from fourtree.models.certificate import SquareSplit
from fourtree.generators.structures import CubicSizes, SquareSizes, gen_cubic_structure, gen_square_structure
from fourtree.utils.config import get_config


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def with_vertex(g: Graph, neighbors: Iterable[int]) -> Graph:
    """g plus one new vertex g.n joined to neighbors."""
    return build_graph(g.n + 1, list(g.edges()) + [(u, g.n) for u in neighbors])


def stable_neighbors(g: Graph, pool: List[int], seed: int) -> List[int]:
    """A random stable subset of pool, so that a new vertex joined to it makes no triangle."""
    rng = random.Random(seed)
    order = list(pool)
    rng.shuffle(order)
    chosen: List[int] = []
    for u in order:
        if rng.random() < 0.5 and not any(g.has_edge(u, w) for w in chosen):
            chosen.append(u)
    return sorted(chosen)


def atlas_graphs(max_n: int, triangle_free: bool = False) -> List[Graph]:
    """Every connected graph on 1..max_n vertices (max_n <= 7), up to isomorphism."""
    found = []
    for graph in nx.graph_atlas_g():
        n = graph.number_of_nodes()
        if not 1 <= n <= max_n or not nx.is_connected(graph):
            continue
        g = build_graph(n, list(graph.edges()))
        if not triangle_free or find_triangle(g) is None:
            found.append(g)
    return found


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    monkeypatch.delenv("FOURTREE_CHECK_EVERY_STEP", raising=False)
    get_config.cache_clear()
    yield
    get_config.cache_clear()


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def small_square():
    """C4 on 0..3 with pendant terminals 4..7."""
    return gen_square_structure(SquareSizes(), 0.0, seed=0)


@pytest.fixture
def small_cubic():
    """S1..S8 on 0..7, terminals 8..11, no B and no R."""
    return gen_cubic_structure(CubicSizes(), 0.0, seed=0)


@pytest.fixture
def cubic_from_square():
    """
    Square split where A1 and A3 have two vertices each, plus vertex 10
    adjacent to the inner A1 vertex, to S2 and to the inner A3 vertex.
    """
    edges = [
        (0, 1), (1, 2), (2, 3), (3, 0),
        (4, 5), (5, 0), (6, 1), (7, 8), (8, 2), (9, 3),
        (10, 5), (10, 1), (10, 8),
    ]
    g = build_graph(11, edges)
    split = SquareSplit(A=[[4, 5], [6], [7, 8], [9]], S=[[0], [1], [2], [3]], R=[], terminals=[4, 6, 7, 9])
    return g, split
