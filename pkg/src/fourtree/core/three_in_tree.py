from collections import deque
from typing import Dict, List, Optional
import heapq
import logging

from .graph import Graph, GraphError, VertexSet, bfs_until, check_vertex, find_triangle, is_induced_tree
from ..models.result import ClawDecomposition, InducedTree

logger = logging.getLogger(__name__)


class ThreeInTreeError(Exception):
    """Custom exception for three-in-a-tree queries that cannot be answered"""
    pass


def tree_covering_three(
    g: Graph,
    a: int,
    b: int,
    c: int,
    within: Optional[VertexSet] = None,
    check_triangle: bool = True,
) -> InducedTree:
    """
    Find an inclusion-minimal induced tree containing a, b and c.

    A shortest a-b path P is computed first. A BFS from c then walks through
    vertices with no neighbor on P until it meets a vertex w that has one.
    The tree is P with the segment between w's first and last neighbor
    replaced by w, plus the BFS path from c to w, pruned to minimality.

    Args:
        g: A triangle-free graph
        a, b, c: Vertices to cover, not necessarily distinct
        within: Optional vertex set the tree must stay inside
        check_triangle: Scan g for a triangle first

    Returns:
        InducedTree: Tree with required = the distinct query vertices

    Raises:
        ThreeInTreeError: If the vertices are not connected inside `within`,
            or if g contains a triangle
    """
    for v in (a, b, c):
        try:
            check_vertex(g, v)
        except GraphError as e:
            raise ThreeInTreeError(str(e))
        if within is not None and v not in within:
            raise ThreeInTreeError(f"Vertex {v} lies outside the allowed vertex set")

    if check_triangle:
        triangle = find_triangle(g)
        if triangle is not None:
            raise ThreeInTreeError(f"Graph contains triangle {triangle}")

    def in_pool(u: int) -> bool:
        return within is None or u in within

    path = bfs_until(g, a, lambda u: u == b, in_pool)
    if path is None:
        raise ThreeInTreeError(f"Vertices {a} and {b} are not connected")

    position: Dict[int, int] = {u: i for i, u in enumerate(path)}
    if c in position:
        vertices = set(path)
    else:
        def touches_path(u: int) -> bool:
            return any(w in position for w in g.neighbors(u))

        branch = bfs_until(
            g,
            c,
            lambda u: in_pool(u) and touches_path(u),
            in_pool,
        )
        if branch is None:
            raise ThreeInTreeError(f"Vertex {c} is not connected to {a} and {b}")
        w = branch[-1]
        hits = sorted(position[u] for u in g.neighbors(w) if u in position)
        first, last = hits[0], hits[-1]
        vertices = set(path[:first + 1]) | set(path[last:]) | set(branch)

    required = list(dict.fromkeys((a, b, c)))
    return minimalize_tree(g, InducedTree(vertices=sorted(vertices), required=required))


def minimalize_tree(g: Graph, t: InducedTree) -> InducedTree:
    """
    Shrink a covering tree until no single vertex can be dropped.

    Equivalent to scanning vertices by increasing id and deleting the first
    one whose removal keeps a tree that still covers the required vertices,
    restarting after each deletion: the removable vertices are exactly the
    non-required leaves, so a heap of leaves gives the same sequence.

    Raises:
        ThreeInTreeError: If t does not induce a tree
    """
    members = set(t.vertices)
    if not is_induced_tree(g, members):
        raise ThreeInTreeError(f"Vertex set {sorted(members)[:10]} does not induce a tree")

    required = set(t.required)
    degree = {u: sum(1 for w in g.neighbors(u) if w in members) for u in members}
    leaves = [u for u in members if degree[u] <= 1 and u not in required]
    heapq.heapify(leaves)

    while leaves and len(members) > 1:
        u = heapq.heappop(leaves)
        if u not in members:
            continue
        members.discard(u)
        for w in g.neighbors(u):
            if w in members:
                degree[w] -= 1
                if degree[w] <= 1 and w not in required:
                    heapq.heappush(leaves, w)

    return InducedTree(vertices=sorted(members), required=t.required)


def decompose_claw(g: Graph, t: InducedTree, x1: int, x2: int, x3: int) -> ClawDecomposition:
    """
    Split a minimal tree with leaves x1, x2, x3 into its center and three legs.

    Raises:
        ThreeInTreeError: If the tree is not a subdivided claw on those leaves
    """
    members = set(t.vertices)
    for x in (x1, x2, x3):
        if x not in members:
            raise ThreeInTreeError(f"Leaf {x} is not in the tree")

    degree = {u: sum(1 for w in g.neighbors(u) if w in members) for u in members}
    branching = sorted(u for u in members if degree[u] >= 3)
    if len(branching) != 1 or degree[branching[0]] != 3:
        raise ThreeInTreeError(
            f"Expected exactly one vertex of degree 3, found {[(u, degree[u]) for u in branching]}"
        )

    center = branching[0]
    parent = {center: center}
    queue = deque([center])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w in members and w not in parent:
                parent[w] = u
                queue.append(w)

    legs: List[List[int]] = []
    for x in (x1, x2, x3):
        leg = [x]
        while leg[-1] != center:
            leg.append(parent[leg[-1]])
        leg.reverse()
        legs.append(leg)

    covered = set().union(*legs)
    if covered != members or len({leg[1] for leg in legs if len(leg) > 1}) != 3:
        raise ThreeInTreeError(f"Tree is not the union of three legs from {center} to {x1}, {x2}, {x3}")

    return ClawDecomposition(center=center, legs=legs)
