from typing import List, Set, Tuple
import random
import logging

from ..core.graph import Graph, build_graph, connected_components

logger = logging.getLogger(__name__)


class GeneratorError(Exception):
    """Custom exception for generator parameters that cannot be satisfied"""
    pass


def _break_triangles(n: int, edges: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
    # Edges are visited in lexicographic order; an edge still lying on a
    # triangle is the smallest edge of that triangle and is dropped.
    adjacency: List[Set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adjacency[u].add(v)
        adjacency[v].add(u)
    kept = []
    for u, v in sorted(edges):
        if adjacency[u] & adjacency[v]:
            adjacency[u].discard(v)
            adjacency[v].discard(u)
        else:
            kept.append((u, v))
    return kept


def gen_triangle_free(n: int, p: float, seed: int) -> Graph:
    """
    Random G(n, p) graph with triangles broken by edge deletion.

    Args:
        n: Number of vertices
        p: Edge probability in [0, 1]
        seed: Random seed; equal inputs give equal graphs

    Raises:
        GeneratorError: If n is negative or p is outside [0, 1]
    """
    if n < 0:
        raise GeneratorError(f"Vertex count must be non-negative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise GeneratorError(f"Edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    kept = _break_triangles(n, edges)
    logger.debug("gen_triangle_free n=%d p=%.3f seed=%d: %d sampled, %d kept", n, p, seed, len(edges), len(kept))
    return build_graph(n, kept)


def gen_connected_triangle_free(n: int, p: float, seed: int) -> Graph:
    """gen_triangle_free, then every other component is tied to the first by one edge between smallest vertices."""
    g = gen_triangle_free(n, p, seed)
    components = connected_components(g)
    if len(components) <= 1:
        return g
    root = components[0][0]
    edges = list(g.edges()) + [(root, comp[0]) for comp in components[1:]]
    return build_graph(n, edges)


def gen_bipartite(n: int, m: int, seed: int) -> Graph:
    """
    Random bipartite graph with m distinct edges between even and odd vertices.

    Raises:
        GeneratorError: If m exceeds the number of available pairs
    """
    evens = list(range(0, n, 2))
    odds = list(range(1, n, 2))
    available = len(evens) * len(odds)
    if not 0 <= m <= available:
        raise GeneratorError(f"Cannot place {m} edges; the halves allow {available}")
    rng = random.Random(seed)
    picks = rng.sample(range(available), m)
    edges = [(evens[k // len(odds)], odds[k % len(odds)]) for k in picks]
    return build_graph(n, edges)


def gen_query(g: Graph, seed: int) -> Tuple[int, int, int, int]:
    """Four query vertices drawn uniformly with repetition."""
    if g.n == 0:
        raise GeneratorError("Cannot draw query vertices from an empty graph")
    rng = random.Random(seed)
    a, b, c, d = rng.choices(range(g.n), k=4)
    return a, b, c, d
