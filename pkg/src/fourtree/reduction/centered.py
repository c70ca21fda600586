from typing import Dict, List, Tuple
import logging

from ..core.graph import Graph, GraphError, build_graph, check_vertex, girth
from ..oracle.brute_force import brute_force_centered_tree, brute_force_two_in_cycle

logger = logging.getLogger(__name__)


class ReductionError(Exception):
    """Custom exception for vertex pairs the centered-tree gadget does not accept"""
    pass


def _check_pair(g: Graph, x: int, y: int) -> None:
    # 1. Check ids
    for v in (x, y):
        try:
            check_vertex(g, v)
        except GraphError as e:
            raise ReductionError(str(e))
    # 2. Check the pair is proper
    if x == y:
        raise ReductionError(f"The two cycle vertices must differ, got {x} twice")
    # 3. Check degrees
    for v in (x, y):
        if g.degree(v) != 2:
            raise ReductionError(f"Vertex {v} has degree {g.degree(v)}, expected 2")
    # 4. Check adjacency
    if g.has_edge(x, y):
        raise ReductionError(f"Vertices {x} and {y} are adjacent")


def build_centered_instance(g: Graph, x: int, y: int) -> Tuple[Graph, List[int]]:
    """
    Turn "induced cycle through x and y" into "centered tree covering four terminals".

    x and y are deleted and the remaining vertices renumbered in order. A
    center c is joined to both former neighbors of x and to two new pendant
    terminals x1, x2; the former neighbors of y each get one new pendant
    terminal x3, x4. The new vertices are numbered c, x1, x2, x3, x4 after
    the old ones.

    Args:
        g: Any graph
        x, y: Distinct non-adjacent vertices of degree 2

    Returns:
        Tuple[Graph, List[int]]: The instance and its terminals [x1, x2, x3, x4]

    Raises:
        ReductionError: If the pair does not satisfy the preconditions
    """
    _check_pair(g, x, y)
    renumber: Dict[int, int] = {}
    for v in g.vertices():
        if v not in (x, y):
            renumber[v] = len(renumber)
    edges = [(renumber[u], renumber[v]) for u, v in g.edges() if u in renumber and v in renumber]

    c = len(renumber)
    x1, x2, x3, x4 = c + 1, c + 2, c + 3, c + 4
    x_left, x_right = (renumber[v] for v in g.neighbors(x))
    y_left, y_right = (renumber[v] for v in g.neighbors(y))
    edges += [(c, x1), (c, x2), (c, x_left), (c, x_right), (y_left, x3), (y_right, x4)]

    h = build_graph(c + 5, edges)
    logger.debug("centered instance from (%d, %d): n=%d m=%d", x, y, h.n, h.m)
    return h, [x1, x2, x3, x4]


def check_reduction(g: Graph, x: int, y: int) -> bool:
    """
    Check on one instance that the cycle exists exactly when the centered tree does.

    Raises:
        ReductionError: If the pair is not admissible
        OracleError: If either graph exceeds the oracle limit
    """
    has_cycle = brute_force_two_in_cycle(g, x, y) is not None
    h, terminals = build_centered_instance(g, x, y)
    has_tree = brute_force_centered_tree(h, terminals) is not None
    if has_cycle != has_tree:
        logger.warning("reduction disagrees on (%d, %d): cycle=%s tree=%s", x, y, has_cycle, has_tree)
    return has_cycle == has_tree


def preserves_short_cycle_freeness(g: Graph, x: int, y: int, k: int) -> bool:
    """True unless g has no cycle of length at most k while the built instance has one."""
    before = girth(g)
    if before is not None and before <= k:
        return True
    h, _ = build_centered_instance(g, x, y)
    after = girth(h)
    return after is None or after > k
