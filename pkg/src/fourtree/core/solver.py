from typing import Iterable, List, Optional, Sequence, Set, Tuple, Union
import heapq
import logging

from .cubic import CubicAugmenter
from .graph import Graph, GraphError, bfs_until, build_graph, check_vertex, connected_components, find_triangle
from .square import SquareAugmenter
from .structure import R, AugmentationError, CubicState, SplitState, SquareState, certify_tree, touches
from .three_in_tree import ThreeInTreeError, decompose_claw, minimalize_tree, tree_covering_three
from .validator import validate_certificate, validate_tree
from ..models.certificate import CubicSplit, DisconnectedCertificate, SquareSplit
from ..models.result import AnswerKind, InducedTree, OutcomeKind, SolveResult, Terminals
from ..utils.config import Config, get_config

logger = logging.getLogger(__name__)


class SolverError(Exception):
    """Custom exception for inputs the solver rejects or internal checks that fail"""
    pass


class TriangleError(SolverError):
    """Custom exception for inputs that contain a triangle"""

    def __init__(self, triangle: Tuple[int, int, int]):
        self.triangle = triangle
        super().__init__(f"Graph is not triangle-free: triangle {triangle}")


def attach_terminals(g: Graph, *ys: int) -> Tuple[Graph, Terminals]:
    """
    Hang a new pendant vertex x_i = n + i off every query vertex y_i.

    An induced tree of g covers y1..yk exactly when one of the new graph
    covers x1..xk. Repeated query vertices get one pendant each.

    Args:
        g: The input graph
        *ys: Query vertices, at least one

    Returns:
        Tuple[Graph, Terminals]: The extended graph and its terminals

    Raises:
        SolverError: If no query vertex is given or one is out of range
    """
    if not ys:
        raise SolverError("At least one query vertex is required")
    for y in ys:
        try:
            check_vertex(g, y)
        except GraphError as e:
            raise SolverError(str(e))
    edges = list(g.edges())
    terminals = []
    for i, y in enumerate(ys):
        x = g.n + i
        edges.append((y, x))
        terminals.append(x)
    extended = build_graph(g.n + len(ys), edges)
    return extended, Terminals(vertices=terminals, gadget_map=dict(zip(terminals, ys)))


def strip_terminals(tree: InducedTree, terminals: Terminals) -> InducedTree:
    """Drop the pendant terminals from a tree of the extended graph."""
    pendants = set(terminals.vertices)
    required = list(dict.fromkeys(terminals.gadget_map.get(x, x) for x in terminals.vertices))
    return InducedTree(vertices=[u for u in tree.vertices if u not in pendants], required=required)


def initial_phase(g: Graph, t: Terminals) -> Union[InducedTree, SquareSplit]:
    """
    First step: a tree covering the four terminals, or a small square split containing them.

    A minimal tree over x1, x2, x3 is a subdivided claw with center c and legs
    P1, P2, P3. A BFS from x4 outside the claw stops at the first vertex w
    with a neighbor on it; u_i is the neighbor of w on P_i closest to x_i.

    Args:
        g: A triangle-free graph in which x1..x4 are pendant and connected
        t: Four terminals

    Returns:
        Union[InducedTree, SquareSplit]: Covering tree, or a square split of a subgraph

    Raises:
        SolverError: If the terminals are not connected or not pendant
    """
    if len(t) != 4:
        raise SolverError(f"Four terminals are required, got {len(t)}")
    x1, x2, x3, x4 = t.vertices
    for x in t.vertices:
        if g.degree(x) != 1:
            raise SolverError(f"Terminal {x} has degree {g.degree(x)}, expected 1")

    try:
        claw = decompose_claw(g, tree_covering_three(g, x1, x2, x3, check_triangle=False), x1, x2, x3)
    except ThreeInTreeError as e:
        raise SolverError(f"Initial claw failed: {e}")

    c = claw.center
    # legs[i] runs x_i ... c
    legs = [list(reversed(leg)) for leg in claw.legs]
    on_claw: Set[int] = {c}.union(*legs)

    q = bfs_until(g, x4, lambda u: touches(g, u, on_claw), lambda u: u not in on_claw)
    if q is None:
        raise SolverError(f"Terminal {x4} is not connected to {x1}, {x2}, {x3}")
    w = q[-1]

    cut: List[Optional[int]] = []
    for leg in legs:
        hits = [p for p, u in enumerate(leg[:-1]) if g.has_edge(w, u)]
        cut.append(hits[0] if hits else None)
    touched = [i for i in range(3) if cut[i] is not None]
    logger.debug("initial claw center %d, attachment %d touches legs %s", c, w, touched)

    def prefix(i: int) -> List[int]:
        return legs[i][:cut[i] + 1]

    def certified(pieces, case: str) -> InducedTree:
        try:
            vertices = certify_tree(g, pieces, t.vertices, case)
        except AugmentationError as e:
            raise SolverError(str(e))
        return InducedTree(vertices=sorted(vertices), required=t.vertices)

    if g.has_edge(w, c):
        return certified([q] + [prefix(i) if cut[i] is not None else legs[i] for i in range(3)],
                         "initial-center")
    if len(touched) == 3:
        return certified([q] + [prefix(i) for i in range(3)], "initial-three-legs")
    if len(touched) == 1:
        i = touched[0]
        sub = tree_covering_three(g, w, c, legs[i][0], within=set(legs[i]) | {w}, check_triangle=False)
        return certified([q, sub.vertices] + [legs[j] for j in range(3) if j != i], "initial-one-leg")

    i, j = touched
    k = next(x for x in range(3) if x not in touched)
    for near, far in ((i, j), (j, i)):
        if not g.has_edge(legs[near][cut[near]], c):
            sub = tree_covering_three(g, w, c, legs[far][0], within=set(legs[far]) | {w}, check_triangle=False)
            return certified([q, prefix(near), sub.vertices, legs[k]], "initial-two-legs")

    a_parts = [legs[i][:cut[i]], legs[k][:-1], legs[j][:cut[j]], q[:-1]]
    s_parts = [[legs[i][cut[i]]], [c], [legs[j][cut[j]]], [w]]
    return SquareSplit(
        a_parts=a_parts,
        s_parts=s_parts,
        r_part=[],
        terminals=[legs[i][0], legs[k][0], legs[j][0], x4],
    )


class FourInATreeSolver:
    """
    Decides four-in-a-tree on triangle-free graphs.

    The working split grows one vertex at a time, starting from the split of
    the first step. Vertices adjacent to the current domain are taken first,
    smallest id first.
    """

    def __init__(self, config: Optional[Config] = None):
        self.config = config or get_config()

    def solve(self, g: Graph, y1: int, y2: int, y3: int, y4: int) -> SolveResult:
        """
        Run the whole algorithm on g with query vertices y1..y4.

        Returns:
            SolveResult: A tree of g covering the query, or a certificate over
                the graph with pendant terminals attached

        Raises:
            TriangleError: If g contains a triangle
            SolverError: On bad vertex ids or a failed internal check
        """
        query = [y1, y2, y3, y4]
        for y in query:
            try:
                check_vertex(g, y)
            except GraphError as e:
                raise SolverError(str(e))
        triangle = find_triangle(g)
        if triangle is not None:
            raise TriangleError(triangle)

        h, terminals = attach_terminals(g, *query)
        components = connected_components(h)
        component = next(comp for comp in components if terminals[0] in comp)
        members = set(component)
        outside = sorted(x for x in terminals if x not in members)
        if outside:
            certificate = DisconnectedCertificate(
                component=component, terminals=terminals.vertices, separated=outside
            )
            self._check_certificate(h, certificate)
            logger.info("terminals %s lie outside the component of %d", outside, terminals[0])
            return SolveResult(answer=AnswerKind.NO_TREE, query=query, certificate=certificate, gadgeted=True)

        first = initial_phase(h, terminals)
        if isinstance(first, InducedTree):
            return self._tree_result(g, h, first, terminals, query, steps=0)

        state: SplitState = SquareState.from_split(h, first)
        logger.info("initial square split over %d vertices", len(state))
        steps = 0
        budget = h.n * h.n + 1
        frontier: List[int] = []
        self._push_frontier(h, state, frontier, state.domain())

        while len(state) < len(members):
            steps += 1
            if steps > budget:
                raise SolverError(f"Iteration budget {budget} exceeded with {len(state)} vertices placed")
            v = self._next_vertex(state, frontier, component)

            if isinstance(state, CubicState):
                result = CubicAugmenter(h, state).step(v)
            else:
                result = SquareAugmenter(h, state).step(v)
            logger.debug("step %d: vertex %d -> %s (%s)", steps, v, result.kind.value, result.trace.get("branch"))

            if result.kind == OutcomeKind.FOUND_TREE:
                tree = InducedTree(vertices=sorted(result.tree), required=terminals.vertices)
                return self._tree_result(g, h, tree, terminals, query, steps)
            if result.kind == OutcomeKind.BECAME_CUBIC:
                state = result.cubic
                logger.info("switched to cubic split after %d steps, %d vertices evicted", steps, len(result.evicted))
                frontier = []
                self._push_frontier(h, state, frontier, state.domain())
            else:
                self._push_frontier(h, state, frontier, [v])

            if self.config.check_every_step:
                violations = validate_certificate(h, state.to_split(), state.domain())
                if violations:
                    raise SolverError(f"Working split invalid after step {steps}: {violations[0]}")

        for u in h.vertices():
            if u not in members:
                state.place(u, R)
        certificate = state.to_split()
        self._check_certificate(h, certificate)
        logger.info("no tree: %s certificate after %d steps", certificate.kind, steps)
        return SolveResult(answer=AnswerKind.NO_TREE, query=query, certificate=certificate, gadgeted=True, steps=steps)

    @staticmethod
    def _push_frontier(h: Graph, state: SplitState, frontier: List[int], sources) -> None:
        for u in sources:
            for w in h.neighbors(u):
                if w not in state:
                    heapq.heappush(frontier, w)

    @staticmethod
    def _next_vertex(state: SplitState, frontier: List[int], component: List[int]) -> int:
        while frontier:
            v = heapq.heappop(frontier)
            if v not in state:
                return v
        return next(u for u in component if u not in state)

    @staticmethod
    def _check_certificate(h: Graph, certificate) -> None:
        violations = validate_certificate(h, certificate)
        if violations:
            raise SolverError(f"Final certificate invalid: {violations[0]}")

    @staticmethod
    def _tree_result(g: Graph, h: Graph, tree: InducedTree, terminals: Terminals, query: List[int], steps: int) -> SolveResult:
        stripped = strip_terminals(minimalize_tree(h, tree), terminals)
        violations = validate_tree(g, stripped.vertices, query)
        if violations:
            raise SolverError(f"Returned tree invalid: {violations[0]}")
        return SolveResult(answer=AnswerKind.TREE, query=query, tree=stripped, steps=steps)


def four_in_a_tree(g: Graph, y1: int, y2: int, y3: int, y4: int, config: Optional[Config] = None) -> SolveResult:
    """Functional entry point; see FourInATreeSolver.solve."""
    return FourInATreeSolver(config).solve(g, y1, y2, y3, y4)


def solve_within(
    g: Graph, domain: Iterable[int], terminals: Sequence[int], config: Optional[Config] = None
) -> Union[InducedTree, SquareSplit, CubicSplit]:
    """
    Four-in-a-tree on G[domain] for terminals of any degree, answered in g's ids.

    The solver runs with pendant vertices hung off the terminals. A split is
    only returned when each terminal sits in the A part of its own pendant,
    so that dropping the pendants leaves a split of G[domain].

    Args:
        g: A triangle-free graph
        domain: Vertices of the subgraph, terminals included
        terminals: Four distinct terminals

    Returns:
        Union[InducedTree, SquareSplit, CubicSplit]: Covering tree or split of G[domain]

    Raises:
        SolverError: If no tree exists and no split keeps the terminals in A
    """
    kept = sorted(set(domain))
    sub, mapping = g.induced_subgraph(kept)
    result = FourInATreeSolver(config).solve(sub, *(mapping[x] for x in terminals))
    if result.found:
        return InducedTree(vertices=sorted(kept[u] for u in result.tree.vertices), required=list(terminals))

    certificate = result.certificate
    if isinstance(certificate, DisconnectedCertificate):
        raise SolverError(f"Terminals {list(terminals)} are not connected inside the domain")
    order = [terminals[p - sub.n] for p in certificate.terminals]
    for k, x in enumerate(order):
        if mapping[x] not in certificate.a_parts[k]:
            raise SolverError(
                f"No induced tree covers {list(terminals)} and the {certificate.kind} split found "
                f"puts terminal {x} outside A{k + 1}"
            )

    def back(part: List[int]) -> List[int]:
        return [kept[u] for u in part if u < sub.n]

    if isinstance(certificate, SquareSplit):
        return SquareSplit(
            a_parts=[back(p) for p in certificate.a_parts],
            s_parts=[back(p) for p in certificate.s_parts],
            r_part=back(certificate.r_part),
            terminals=order,
        )
    return CubicSplit(
        a_parts=[back(p) for p in certificate.a_parts],
        b_parts=[back(p) for p in certificate.b_parts],
        s_parts=[back(p) for p in certificate.s_parts],
        r_part=back(certificate.r_part),
        terminals=order,
    )
