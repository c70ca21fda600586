from typing import Callable, Iterator, List, Optional, Sequence, Set
import logging

from ..core.graph import Graph, check_vertex, GraphError, is_centered_tree
from ..models.result import InducedTree
from ..utils.config import get_config

logger = logging.getLogger(__name__)

Accept = Callable[[Set[int], int], bool]


class OracleError(Exception):
    """Custom exception for oracle calls outside the supported size range"""
    pass


def _check_size(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise OracleError(f"Graph has {g.n} vertices, the exhaustive oracle accepts at most {limit}")


def _check_vertices(g: Graph, vertices: Sequence[int]) -> None:
    for v in vertices:
        try:
            check_vertex(g, v)
        except GraphError as e:
            raise OracleError(str(e))


def iter_connected_sets(
    g: Graph,
    root: int,
    accept: Accept,
    max_size: Optional[int] = None,
) -> Iterator[Set[int]]:
    """
    Enumerate the connected vertex sets containing root, each exactly once.

    Every frontier vertex is decided once: first excluded for good, then
    included. `accept(current, v)` must be hereditary: if it rejects v for
    a set it rejects v for every superset, so rejected vertices are dropped
    from the branch.

    Yields:
        Set[int]: A fresh set each time
    """
    limit = g.n if max_size is None else max_size

    def grow(current: Set[int], frontier: List[int], excluded: Set[int]) -> Iterator[Set[int]]:
        if not frontier:
            yield set(current)
            return
        v, rest = frontier[0], frontier[1:]
        excluded.add(v)
        yield from grow(current, rest, excluded)
        excluded.discard(v)
        if len(current) < limit and accept(current, v):
            pending = set(frontier)
            new = [w for w in g.neighbors(v) if w not in current and w not in excluded and w not in pending]
            current.add(v)
            yield from grow(current, rest + new, excluded)
            current.discard(v)

    if limit < 1:
        return
    yield from grow({root}, list(g.neighbors(root)), set())


def _inner_degree(g: Graph, z: Set[int], v: int) -> int:
    return sum(1 for w in g.neighbors(v) if w in z)


def _smallest(found: Optional[List[int]], candidate: Set[int]) -> List[int]:
    ordered = sorted(candidate)
    if found is None or (len(ordered), ordered) < (len(found), found):
        return ordered
    return found


def brute_force_tree(
    g: Graph,
    required: Sequence[int],
    max_extra: Optional[int] = None,
) -> Optional[InducedTree]:
    """
    A minimum induced tree covering `required`, by exhaustive search.

    Args:
        g: Any graph with at most Config.oracle_max_vertices vertices
        required: Vertices to cover, repetitions allowed
        max_extra: Optional bound on the number of tree vertices beyond the required ones

    Returns:
        Optional[InducedTree]: The smallest such tree (ties by sorted vertex list), or None

    Raises:
        OracleError: If the graph is too large or a vertex is unknown
    """
    _check_size(g, get_config().oracle_max_vertices)
    _check_vertices(g, required)
    targets = set(required)
    if not targets:
        raise OracleError("At least one required vertex is needed")
    bound = [g.n if max_extra is None else len(targets) + max_extra]
    best: List[Optional[List[int]]] = [None]

    def accept(current: Set[int], v: int) -> bool:
        return len(current) < bound[0] and _inner_degree(g, current, v) == 1

    for z in iter_connected_sets(g, min(targets), accept):
        if targets <= z:
            best[0] = _smallest(best[0], z)
            bound[0] = len(best[0])
    if best[0] is None:
        return None
    return InducedTree(vertices=best[0], required=list(dict.fromkeys(required)))


def brute_force_centered_tree(g: Graph, required: Sequence[int]) -> Optional[InducedTree]:
    """
    A minimum induced tree covering `required` with at most one vertex of degree above two.

    Raises:
        OracleError: If the graph is too large or a vertex is unknown
    """
    _check_size(g, get_config().centered_oracle_max_vertices)
    _check_vertices(g, required)
    targets = set(required)
    if not targets:
        raise OracleError("At least one required vertex is needed")
    best: Optional[List[int]] = None

    def accept(current: Set[int], v: int) -> bool:
        if _inner_degree(g, current, v) != 1:
            return False
        grown = current | {v}
        return sum(1 for u in grown if _inner_degree(g, grown, u) > 2) <= 1

    for z in iter_connected_sets(g, min(targets), accept):
        if targets <= z and is_centered_tree(g, z):
            best = _smallest(best, z)
    if best is None:
        return None
    return InducedTree(vertices=best, required=list(dict.fromkeys(required)))


def brute_force_two_in_cycle(g: Graph, x: int, y: int) -> Optional[List[int]]:
    """
    Vertex set of a shortest induced cycle through x and y, or None.

    Raises:
        OracleError: If the graph is too large or a vertex is unknown
    """
    _check_size(g, get_config().centered_oracle_max_vertices)
    _check_vertices(g, [x, y])
    best: Optional[List[int]] = None

    def accept(current: Set[int], v: int) -> bool:
        grown = current | {v}
        return all(_inner_degree(g, grown, u) <= 2 for u in grown)

    for z in iter_connected_sets(g, x, accept):
        if y in z and len(z) >= 3 and all(_inner_degree(g, z, u) == 2 for u in z):
            best = _smallest(best, z)
    logger.debug("cycle oracle for (%d, %d): %s", x, y, best)
    return best
