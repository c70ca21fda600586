from collections import deque
from typing import AbstractSet, Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple
import logging
import math

import networkx as nx

logger = logging.getLogger(__name__)

VertexSet = AbstractSet[int]
Path = List[int]


class GraphError(Exception):
    """Custom exception for malformed graphs and invalid vertex queries"""
    pass


class Graph:
    """
    Immutable simple undirected graph on vertices 0..n-1.

    Adjacency lists are kept sorted so every traversal in the package visits
    neighbors in increasing id order. Build instances through build_graph,
    which validates the edge list; the constructor trusts its input.
    """

    __slots__ = ("_adjacency", "_neighbor_sets", "_m")

    def __init__(self, adjacency: Sequence[Iterable[int]]):
        self._adjacency: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(sorted(neighbors)) for neighbors in adjacency
        )
        self._neighbor_sets: Tuple[frozenset, ...] = tuple(
            frozenset(neighbors) for neighbors in self._adjacency
        )
        self._m = sum(len(neighbors) for neighbors in self._adjacency) // 2

    @property
    def n(self) -> int:
        return len(self._adjacency)

    @property
    def m(self) -> int:
        return self._m

    def vertices(self) -> range:
        return range(len(self._adjacency))

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """Sorted neighbors of v."""
        return self._adjacency[v]

    def neighbor_set(self, v: int) -> frozenset:
        return self._neighbor_sets[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, in lexicographic order."""
        for u, neighbors in enumerate(self._adjacency):
            for v in neighbors:
                if u < v:
                    yield u, v

    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        return self._adjacency

    def induced_subgraph(self, vertices: Iterable[int]) -> Tuple["Graph", Dict[int, int]]:
        """
        Build G[vertices] with ids compacted in increasing order.

        Args:
            vertices: Vertex ids to keep

        Returns:
            Tuple[Graph, Dict[int, int]]: The subgraph and the old-to-new id map
        """
        kept = sorted(set(vertices))
        mapping = {old: new for new, old in enumerate(kept)}
        adjacency = [
            [mapping[w] for w in self._adjacency[old] if w in mapping]
            for old in kept
        ]
        return Graph(adjacency), mapping

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adjacency == other._adjacency

    def __hash__(self) -> int:
        return hash(self._adjacency)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """
    Build a simple graph from an edge list, rejecting anything non-simple.

    Args:
        n: Number of vertices
        edges: Vertex pairs, each pair listed once in either orientation

    Returns:
        Graph: The validated graph

    Raises:
        GraphError: On a negative count, self-loop, out-of-range id or duplicate edge
    """
    if n < 0:
        raise GraphError(f"Vertex count must be non-negative, got {n}")

    adjacency: List[set] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"Edge ({u}, {v}) references a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"Self-loop at vertex {u}")
        if v in adjacency[u]:
            raise GraphError(f"Duplicate edge ({u}, {v})")
        adjacency[u].add(v)
        adjacency[v].add(u)
    return Graph(adjacency)


def check_vertex(g: Graph, v: int) -> None:
    """Raise GraphError unless v is a vertex of g."""
    if not isinstance(v, int) or not 0 <= v < g.n:
        raise GraphError(f"Vertex {v} is not in 0..{g.n - 1}")


def find_triangle(g: Graph) -> Optional[Tuple[int, int, int]]:
    """
    Return the lexicographically smallest triangle (a, b, c) with a < b < c, or None.
    """
    for a in g.vertices():
        neighbors_a = g.neighbor_set(a)
        for b in g.neighbors(a):
            if b <= a:
                continue
            common = [c for c in g.neighbors(b) if c > b and c in neighbors_a]
            if common:
                return a, b, common[0]
    return None


def count_edges_within(g: Graph, z: VertexSet) -> int:
    return sum(1 for u in z for w in g.neighbors(u) if w in z) // 2


def is_connected_set(g: Graph, z: VertexSet) -> bool:
    """True when G[z] is connected. The empty set counts as connected."""
    if not z:
        return True
    start = min(z)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w in z and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(z)


def is_induced_tree(g: Graph, z: VertexSet) -> bool:
    """
    Check whether G[z] is a tree.

    Raises:
        GraphError: If z is empty
    """
    if not z:
        raise GraphError("An induced tree needs at least one vertex")
    z = z if isinstance(z, (set, frozenset)) else set(z)
    return count_edges_within(g, z) == len(z) - 1 and is_connected_set(g, z)


def is_centered_tree(g: Graph, z: VertexSet) -> bool:
    """An induced tree with at most one vertex of degree greater than two."""
    z = z if isinstance(z, (set, frozenset)) else set(z)
    if not is_induced_tree(g, z):
        return False
    branching = sum(1 for u in z if sum(1 for w in g.neighbors(u) if w in z) > 2)
    return branching <= 1


def is_induced_path(g: Graph, path: Sequence[int]) -> bool:
    """Consecutive vertices adjacent, no repeats, no chords."""
    if not path or len(set(path)) != len(path):
        return False
    position = {v: i for i, v in enumerate(path)}
    for i, u in enumerate(path):
        for w in g.neighbors(u):
            j = position.get(w)
            if j is not None and abs(i - j) != 1:
                return False
        if i + 1 < len(path) and not g.has_edge(u, path[i + 1]):
            return False
    return True


def bfs_until(
    g: Graph,
    source: int,
    is_target: Callable[[int], bool],
    can_pass: Callable[[int], bool],
) -> Optional[Path]:
    """
    Breadth-first search from source to the first vertex accepted by is_target.

    Vertices are discovered in FIFO order with neighbors scanned by increasing
    id. A discovered target is returned immediately; only non-target vertices
    accepted by can_pass are expanded. The source itself is always expanded.

    Returns:
        Optional[Path]: source ... target, or None when no target is reachable
    """
    if is_target(source):
        return [source]
    parent: Dict[int, int] = {source: source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w in parent:
                continue
            parent[w] = u
            if is_target(w):
                path = [w]
                while path[-1] != source:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            if can_pass(w):
                queue.append(w)
    return None


def bfs_path(g: Graph, source: int, targets: VertexSet, allowed: VertexSet) -> Optional[Path]:
    """
    Shortest path from source to targets whose interior lies in allowed minus targets.

    Args:
        g: The graph
        source: Start vertex
        targets: Acceptable end vertices
        allowed: Vertices that may be used as interior vertices

    Returns:
        Optional[Path]: The path, [source] if source is a target, None if unreachable
    """
    check_vertex(g, source)
    return bfs_until(g, source, targets.__contains__, allowed.__contains__)


def _check_disjoint(x: VertexSet, y: VertexSet) -> None:
    overlap = set(x) & set(y)
    if overlap:
        raise GraphError(f"Sets must be disjoint, both contain {sorted(overlap)[:5]}")


def is_complete_to(g: Graph, x: VertexSet, y: VertexSet) -> bool:
    """Every vertex of x is adjacent to every vertex of y."""
    _check_disjoint(x, y)
    y = y if isinstance(y, (set, frozenset)) else set(y)
    size = len(y)
    return all(sum(1 for w in g.neighbors(u) if w in y) == size for u in x)


def is_anticomplete_to(g: Graph, x: VertexSet, y: VertexSet) -> bool:
    """No edge between x and y."""
    _check_disjoint(x, y)
    y = y if isinstance(y, (set, frozenset)) else set(y)
    return not any(w in y for u in x for w in g.neighbors(u))


def neighborhood(g: Graph, z: VertexSet, within: Optional[VertexSet] = None) -> set:
    """N(z): vertices outside z with a neighbor in z, optionally restricted to within."""
    found = set()
    for u in z:
        for w in g.neighbors(u):
            if w not in z and (within is None or w in within):
                found.add(w)
    return found


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(g.vertices())
    graph.add_edges_from(g.edges())
    return graph


def connected_components(g: Graph, within: Optional[VertexSet] = None) -> List[List[int]]:
    """Components of G (or G[within]) as sorted lists, ordered by smallest vertex."""
    graph = to_networkx(g)
    if within is not None:
        graph = graph.subgraph(within)
    return sorted(sorted(component) for component in nx.connected_components(graph))


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for a forest."""
    shortest = nx.girth(to_networkx(g))
    return None if math.isinf(shortest) else int(shortest)
