from collections import deque
from typing import Dict, List, Optional, Set, Tuple
import logging

from .graph import Graph, VertexSet
from .structure import (
    A, R, S, AugmentationError, CubicState, Frame, SquareState, StepResult, certify_tree, terminals_are_pendant
)
from .three_in_tree import tree_covering_three
from .validator import validate_cubic, validate_square
from ..models.certificate import CubicSplit, SquareSplit
from ..models.result import InducedTree, OutcomeKind, SquareAugmentOutcome, SquareAugmentTrace

logger = logging.getLogger(__name__)


def path_to_terminal(g: Graph, split: SquareSplit, i: int, s: int) -> List[int]:
    """
    Shortest path s ... x_i whose interior lies in A_i.

    Args:
        g: The graph
        split: A valid square split
        i: Part index, 0-based
        s: A vertex of S_i or A_i

    Raises:
        AugmentationError: If s is in neither part or cannot reach x_i
    """
    if s not in split.s_parts[i] and s not in split.a_parts[i]:
        raise AugmentationError(f"Vertex {s} is in neither S{i + 1} nor A{i + 1}")
    return SquareState.from_split(g, split).paths.path(i, s)


class SquareAugmenter:
    """
    Absorbs vertices one at a time into a square split, or stops with a
    covering tree or a cubic split.

    Normalization puts the anchor (the A-neighbor of v with the shortest path
    to its terminal) at index 1 by a rotation; reflections exchange 2 and 4.
    """

    def __init__(self, g: Graph, state: SquareState):
        self.g = g
        self.state = state

    def _groups(self, f: Frame, u: int) -> Dict[Tuple[str, int], List[int]]:
        groups: Dict[Tuple[str, int], List[int]] = {}
        for w in self.g.neighbors(u):
            label = f.label(w)
            if label is not None:
                groups.setdefault(label, []).append(w)
        return groups

    def _is_complete(self, f: Frame, groups) -> bool:
        return (len(groups.get((S, 2), [])) == len(f.S(2))
                and len(groups.get((S, 4), [])) == len(f.S(4)))

    @staticmethod
    def _is_bad(f: Frame, groups, complete: bool) -> bool:
        outside = any((kind == A and j != 1) or (kind == S and j != 1) for kind, j in groups)
        if not outside:
            return False
        fits = (complete
                and not groups.get((S, 1))
                and not groups.get((S, 3))
                and not any(kind == A and j != 1 for kind, j in groups))
        return not fits

    def step(self, v: int) -> StepResult:
        g, st = self.g, self.state
        if v in st:
            raise AugmentationError(f"Vertex {v} is already in the domain")

        trace: Dict[str, object] = {"v": v}
        candidates = []
        for u in g.neighbors(v):
            found = st.where.get(u)
            if found is not None and found[0] == A:
                candidates.append((st.paths.dist(found[1], u), found[1], u))

        # v has no neighbor in A
        if not candidates:
            st.place(v, R)
            trace.update(branch="no-a-neighbor", reach=[v])
            return StepResult(OutcomeKind.GREW_SQUARE, trace=trace)

        _, first, anchor = min(candidates)
        f = Frame.rotated(st, first)
        trace.update(anchor=anchor, anchor_index=first, symmetry=list(f.perm))

        groups = self._groups(f, v)
        complete = self._is_complete(f, groups)
        if self._is_bad(f, groups, complete):
            trace["q_path"] = [v]
            return self._cascade(f, anchor, [v], trace)

        reach = self._reach(v)
        if complete:
            f.place(v, S, 1)
            trace.update(branch="complete", complete_set=[v], reach=sorted(reach),
                         reach_second=[v], reach_third=sorted(reach - {v}))
            return StepResult(OutcomeKind.GREW_SQUARE, trace=trace)

        parent = {v: v}
        first_reach, second_reach = [v], []
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w in parent or st.where.get(w, (None,))[0] != R:
                    continue
                parent[w] = u
                w_groups = self._groups(f, w)
                w_complete = self._is_complete(f, w_groups)
                if self._is_bad(f, w_groups, w_complete):
                    q = [w]
                    while q[-1] != v:
                        q.append(parent[q[-1]])
                    q.reverse()
                    trace["q_path"] = q
                    return self._cascade(f, anchor, q, trace)
                if w_complete:
                    second_reach.append(w)
                else:
                    first_reach.append(w)
                    queue.append(w)

        for u in first_reach:
            f.place(u, A, 1)
        for u in second_reach:
            f.place(u, S, 1)
        third = reach - set(first_reach) - set(second_reach)
        trace.update(
            branch="absorb",
            complete_set=sorted(second_reach),
            reach=sorted(reach),
            reach_first=sorted(first_reach),
            reach_second=sorted(second_reach),
            reach_third=sorted(third),
        )
        logger.debug("square absorbed %d vertices into A and %d into S", len(first_reach), len(second_reach))
        return StepResult(OutcomeKind.GREW_SQUARE, trace=trace)

    def _reach(self, v: int) -> Set[int]:
        """v and every R vertex reachable from v through R."""
        st = self.state
        seen = {v}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in self.g.neighbors(u):
                if w not in seen and w in st.r:
                    seen.add(w)
                    queue.append(w)
        return seen

    def _tree(self, pieces, case: str, trace) -> StepResult:
        trace["branch"] = case
        vertices = certify_tree(self.g, pieces, self.state.terminals, case)
        return StepResult(OutcomeKind.FOUND_TREE, tree=vertices, trace=trace)

    def _three(self, a: int, b: int, c: int, within: Set[int]) -> List[int]:
        return tree_covering_three(self.g, a, b, c, within=within, check_triangle=False).vertices

    def _cascade(self, f: Frame, anchor: int, q: List[int], trace) -> StepResult:
        g = self.g
        v, w = q[0], q[-1]
        groups = self._groups(f, w)

        def nbrs(kind: str, j: int) -> List[int]:
            return groups.get((kind, j), [])

        p_anchor = f.path(1, anchor)

        # w has a neighbor in A2 or A4
        if nbrs(A, 2) or nbrs(A, 4):
            if w != v:
                raise AugmentationError(f"Vertex {w} of R has a neighbor in A")
            if not nbrs(A, 2):
                f = f.swapped(2, 4)
                groups = self._groups(f, v)
                trace["symmetry"] = list(f.perm)
            return self._second_a_neighbor(f, anchor, p_anchor, groups, trace)

        # w has a neighbor in S3
        if nbrs(S, 3):
            s3 = min(nbrs(S, 3))
            t3 = self._three(w, s3, f.x(3), f.A(3) | {w, s3})
            return self._tree([p_anchor, q, f.path(2, min(f.S(2))), t3, f.path(4, min(f.S(4)))],
                              "square-s3-neighbor", trace)

        # w has no neighbor in S2 or S4
        if not nbrs(S, 2) and not nbrs(S, 4):
            if not nbrs(A, 3):
                raise AugmentationError(f"Vertex {w} was classified bad without an outside neighbor")
            s3 = min(f.S(3))
            t3 = self._three(w, s3, f.x(3), f.A(3) | {w, s3})
            return self._tree([p_anchor, q, f.path(2, min(f.S(2))), t3, f.path(4, min(f.S(4)))],
                              "square-a3-without-s2-s4", trace)

        if not nbrs(S, 2):
            f = f.swapped(2, 4)
            groups = self._groups(f, w)
            trace["symmetry"] = list(f.perm)

        # w has no neighbor in A3
        if not nbrs(A, 3):
            for flip in (False, True):
                frame = f.swapped(2, 4) if flip else f
                w_groups = self._groups(frame, w) if flip else groups
                if not w_groups.get((S, 2)):
                    continue
                missing = sorted(frame.S(4) - set(w_groups.get((S, 4), [])))
                if missing:
                    trace["symmetry"] = list(frame.perm)
                    s2 = min(w_groups[(S, 2)])
                    return self._tree([p_anchor, q, frame.path(2, s2), frame.path(3, min(frame.S(3))),
                                       frame.path(4, missing[0])], "square-missing-s4", trace)
            raise AugmentationError(f"Vertex {w} is complete to S2 and S4 but was classified bad")

        if w != v:
            raise AugmentationError(f"Vertex {w} of R has a neighbor in A3")
        return self._third_a_neighbor(f, anchor, p_anchor, groups, trace)

    def _second_a_neighbor(self, f: Frame, anchor: int, p_anchor: List[int], groups, trace) -> StepResult:
        v = trace["v"]
        a2 = f.nearest(2, groups.get((A, 2), []))
        third = groups.get((A, 3), []) + groups.get((S, 3), [])
        fourth = groups.get((A, 4), []) + groups.get((S, 4), [])

        if third and fourth:
            a3 = f.nearest(3, third)
            a4 = f.nearest(4, fourth)
            return self._tree([p_anchor, [v], f.path(2, a2), f.path(3, a3), f.path(4, a4)],
                              "square-a2-with-third-and-fourth", trace)
        if third:
            a3 = f.nearest(3, third)
            s3 = a3 if a3 in f.S(3) else min(f.S(3))
            t3 = self._three(v, s3, f.x(3), f.A(3) | {v, s3})
            return self._tree([p_anchor, t3, f.path(2, a2), f.path(4, min(f.S(4)))],
                              "square-a2-with-third", trace)
        if fourth:
            a4 = f.nearest(4, fourth)
            s4 = a4 if a4 in f.S(4) else min(f.S(4))
            t4 = self._three(v, s4, f.x(4), f.A(4) | {v, s4})
            return self._tree([p_anchor, t4, f.path(2, a2), f.path(3, min(f.S(3)))],
                              "square-a2-with-fourth", trace)
        s1 = min(f.S(1))
        t1 = self._three(v, s1, f.x(1), f.A(1) | {v, s1})
        return self._tree([t1, f.path(2, a2), f.path(3, min(f.S(3))), f.path(4, min(f.S(4)))],
                          "square-a2-alone", trace)

    @staticmethod
    def _last_contact(g: Graph, u: int, path: List[int]) -> Optional[int]:
        """Position of u's neighbor on path closest to the path's far end."""
        hits = [i for i, p in enumerate(path) if g.has_edge(u, p)]
        return hits[-1] if hits else None

    def _third_a_neighbor(self, f: Frame, anchor: int, p_anchor: List[int], groups, trace) -> StepResult:
        g = self.g
        v = trace["v"]
        a3 = f.nearest(3, groups.get((A, 3), []))
        s2 = min(groups[(S, 2)])
        p_s2 = f.path(2, s2)
        p_a3 = f.path(3, a3)

        if groups.get((S, 4)):
            s4 = min(groups[(S, 4)])
            return self._tree([p_anchor, [v], p_s2, p_a3, f.path(4, s4)], "square-a3-with-s4", trace)

        s1 = min(f.S(1))
        s3 = min(f.S(3))
        s4 = min(f.S(4))
        p_s4 = f.path(4, s4)

        contact = self._last_contact(g, s1, p_anchor)
        if contact is None:
            return self._tree([p_anchor, [s1, v], p_s2, p_a3, p_s4], "square-s1-off-path", trace)
        if contact > 0:
            return self._tree([p_anchor[contact:], [s1, v], p_s2, p_a3, p_s4], "square-s1-deep-contact", trace)

        contact = self._last_contact(g, s3, p_a3)
        if contact is None:
            return self._tree([p_a3, [s3, v], p_s2, p_anchor, p_s4], "square-s3-off-path", trace)
        if contact > 0:
            return self._tree([p_a3[contact:], [s3, v], p_s2, p_anchor, p_s4], "square-s3-deep-contact", trace)

        return self._become_cubic(f, v, p_anchor, p_s2, p_a3, p_s4, s1, s3, trace)

    def _become_cubic(self, f: Frame, v: int, p_a1, p_s2, p_a3, p_s4, s1: int, s3: int, trace) -> StepResult:
        old = self.state
        for path in (p_a1, p_s2, p_a3, p_s4):
            if len(path) < 2:
                raise AugmentationError(
                    f"Terminal {path[0]} has degree above one; the cubic split needs pendant terminals"
                )
        cubic = CubicState(self.g, old.terminals)
        target = Frame(cubic, f.perm)
        for j, path in ((1, p_a1), (2, p_s2), (3, p_a3), (4, p_s4)):
            target.place(path[0], S, j)
            for u in path[1:]:
                target.place(u, A, j)
        target.place(s3, S, 5)
        target.place(s1, S, 7)
        target.place(v, S, 8)

        evicted = old.domain() - cubic.domain()
        trace["branch"] = "became-cubic"
        logger.info("square split turned cubic at vertex %d, %d vertices evicted", v, len(evicted))
        return StepResult(OutcomeKind.BECAME_CUBIC, cubic=cubic, evicted=evicted, trace=trace)


def _check_input(g: Graph, v: int, domain: Set[int]) -> None:
    if not 0 <= v < g.n:
        raise AugmentationError(f"Vertex {v} is not in the graph")
    if v in domain:
        raise AugmentationError(f"Vertex {v} is already in the domain")
    neighbors = g.neighbors(v)
    for i, u in enumerate(neighbors):
        for w in neighbors[i + 1:]:
            if g.has_edge(u, w):
                raise AugmentationError(f"Triangle ({v}, {u}, {w}) at the new vertex")




def _grow(g: Graph, split: SquareSplit, domain: Set[int], v: int) -> SquareAugmentOutcome:
    state = SquareState.from_split(g, split)
    result = SquareAugmenter(g, state).step(v)
    trace = SquareAugmentTrace(**result.trace)

    if result.kind == OutcomeKind.FOUND_TREE:
        return SquareAugmentOutcome(
            kind=result.kind,
            tree=InducedTree(vertices=sorted(result.tree), required=split.terminals),
            trace=trace,
        )
    if result.kind == OutcomeKind.BECAME_CUBIC:
        cubic = result.cubic.to_split()
        new_domain = result.cubic.domain()
        violations = validate_cubic(g, cubic, new_domain)
        if violations:
            raise AugmentationError(f"Cubic split built from the square is invalid: {violations[0]}")
        return SquareAugmentOutcome(kind=result.kind, split=cubic, domain=sorted(new_domain), trace=trace)

    grown = state.to_split()
    violations = validate_square(g, grown, domain | {v})
    if violations:
        raise AugmentationError(f"Grown square split is invalid: {violations[0]}")
    return SquareAugmentOutcome(kind=result.kind, split=grown, domain=sorted(domain | {v}), trace=trace)


def _grow_with_gadget(g: Graph, split: SquareSplit, domain: Set[int], v: int) -> SquareAugmentOutcome:
    """Answer for G[domain + v] from a solver run with pendants hung off the terminals."""
    from .solver import SolverError, solve_within

    grown = domain | {v}
    try:
        answer = solve_within(g, grown, split.terminals)
    except SolverError as e:
        raise AugmentationError(str(e))
    trace = SquareAugmentTrace(v=v, branch="non-pendant-terminal")

    if isinstance(answer, InducedTree):
        return SquareAugmentOutcome(kind=OutcomeKind.FOUND_TREE, tree=answer, trace=trace)
    if isinstance(answer, CubicSplit):
        violations = validate_cubic(g, answer, grown)
        kind = OutcomeKind.BECAME_CUBIC
    else:
        violations = validate_square(g, answer, grown)
        kind = OutcomeKind.GREW_SQUARE
    if violations:
        raise AugmentationError(f"Split of G[domain + {v}] is invalid: {violations[0]}")
    return SquareAugmentOutcome(kind=kind, split=answer, domain=sorted(grown), trace=trace)


def augment_square(g: Graph, split: SquareSplit, domain: VertexSet, v: int) -> SquareAugmentOutcome:
    """
    Add v to a square split of G[domain].

    The case analysis assumes every terminal has a single neighbor. When v
    is adjacent to a terminal and that analysis cannot place v, G[domain + v]
    is solved again with pendants attached, which yields a tree or a split
    keeping the terminals in A whenever one exists.

    Args:
        g: A triangle-free graph
        split: Valid square split of G[domain]
        domain: The split's domain
        v: A vertex outside the domain

    Returns:
        SquareAugmentOutcome: FoundTree, BecameCubic or GrewSquare with its trace

    Raises:
        AugmentationError: If the input split is invalid, v is not admissible,
            or a terminal of degree above one leaves neither a tree nor a split
    """
    domain = set(domain)
    violations = validate_square(g, split, domain)
    if violations:
        raise AugmentationError(f"Invalid square split: {violations[0]}")
    _check_input(g, v, domain)

    try:
        return _grow(g, split, domain, v)
    except AugmentationError as e:
        if terminals_are_pendant(g, split.terminals, domain | {v}):
            raise
        logger.info("square step at %d stopped on a terminal of degree above one (%s)", v, e)
        return _grow_with_gadget(g, split, domain, v)
