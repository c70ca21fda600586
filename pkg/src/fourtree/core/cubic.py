from collections import deque
from typing import Dict, List, Sequence, Set, Tuple
import logging

from .graph import Graph, VertexSet, bfs_until
from .square import _check_input
from .structure import (
    A, B, R, S, AugmentationError, CubicState, Frame, StepResult, certify_tree, neighbors_in, terminals_are_pendant,
    touches
)
from .three_in_tree import tree_covering_three
from .validator import validate_cubic
from ..models.certificate import CubicSplit
from ..models.result import CubicAugmentOutcome, CubicAugmentTrace, InducedTree, OutcomeKind

logger = logging.getLogger(__name__)

PAIRS: Tuple[Tuple[int, int], ...] = (
    (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
    (1, 5), (2, 6), (3, 7), (4, 8),
)


class CubicAugmenter:
    """
    Absorbs vertices one at a time into a cubic split or stops with a covering tree.

    Any permutation of the indices 1..4 is a symmetry; it moves A_i, B_i,
    S_i and S_{i+4} together.
    """

    def __init__(self, g: Graph, state: CubicState):
        self.g = g
        self.state = state

    def _in_b_or_r(self, u: int) -> bool:
        found = self.state.where.get(u)
        return found is not None and found[0] in (B, R)

    def _groups(self, f: Frame, u: int) -> Dict[Tuple[str, int], List[int]]:
        groups: Dict[Tuple[str, int], List[int]] = {}
        for w in self.g.neighbors(u):
            label = f.label(w)
            if label is not None:
                groups.setdefault(label, []).append(w)
        return groups

    def _reach(self, v: int) -> Set[int]:
        """v together with every B or R vertex reachable from v through B and R."""
        seen = {v}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in self.g.neighbors(u):
                if w not in seen and self._in_b_or_r(w):
                    seen.add(w)
                    queue.append(w)
        return seen

    def _tree(self, pieces, case: str, trace) -> StepResult:
        trace["branch"] = case
        vertices = certify_tree(self.g, pieces, self.state.terminals, case)
        return StepResult(OutcomeKind.FOUND_TREE, tree=vertices, trace=trace)

    def _three(self, a: int, b: int, c: int, within: Set[int]) -> List[int]:
        return tree_covering_three(self.g, a, b, c, within=within, check_triangle=False).vertices

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
        if candidates:
            _, first, anchor = min(candidates)
            f = Frame.rotated(st, first)
            trace.update(anchor=anchor, anchor_index=first, symmetry=list(f.perm))
            return self._from_a(f, v, anchor, trace)

        identity = Frame(st)
        groups = self._groups(identity, v)
        for i in range(1, 5):
            if all(len(groups.get((S, j), [])) == len(identity.S(j)) for j in range(1, 5) if j != i):
                return self._opposite(v, i - 1, trace)
        return self._between(v, trace)

    # v has a neighbor in A

    def _from_a(self, f: Frame, v: int, anchor: int, trace) -> StepResult:
        g = self.g
        outside = {(A, 2), (A, 3), (A, 4), (S, 2), (S, 3), (S, 4), (S, 5)}

        def has_outside(u: int) -> bool:
            return any(f.label(w) in outside for w in g.neighbors(u))

        q = bfs_until(
            g,
            v,
            lambda u: (u == v or self._in_b_or_r(u)) and has_outside(u),
            self._in_b_or_r,
        )
        if q is not None:
            trace["q_path"] = q
            return self._path_to_outside(f, anchor, q, trace)

        lower = f.S(6) | f.S(7) | f.S(8)
        total = len(lower)

        def hits(u: int) -> int:
            return sum(1 for w in g.neighbors(u) if w in lower)

        reach = self._reach(v)
        v_hits = hits(v)
        if v_hits == total:
            f.place(v, S, 1)
            for u in reach - {v}:
                f.place(u, B, 1)
            trace.update(branch="a-complete", complete_set=[v], reach=sorted(reach),
                         reach_second=[v], reach_third=sorted(reach - {v}))
            return StepResult(OutcomeKind.GREW_CUBIC, trace=trace)
        if v_hits:
            trace["q_path"] = [v]
            return self._partial_lower(f, anchor, [v], trace)

        parent = {v: v}
        first_reach, second_reach = [v], []
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w in parent or not self._in_b_or_r(w):
                    continue
                parent[w] = u
                h = hits(w)
                if h == 0:
                    first_reach.append(w)
                    queue.append(w)
                elif h == total:
                    second_reach.append(w)
                else:
                    q = [w]
                    while q[-1] != v:
                        q.append(parent[q[-1]])
                    q.reverse()
                    trace["q_path"] = q
                    return self._partial_lower(f, anchor, q, trace)

        third = reach - set(first_reach) - set(second_reach)
        for u in first_reach:
            f.place(u, A, 1)
        for u in second_reach:
            f.place(u, S, 1)
        for u in third:
            f.place(u, B, 1)
        trace.update(
            branch="a-absorb",
            complete_set=sorted(second_reach),
            reach=sorted(reach),
            reach_first=sorted(first_reach),
            reach_second=sorted(second_reach),
            reach_third=sorted(third),
        )
        return StepResult(OutcomeKind.GREW_CUBIC, trace=trace)

    def _group_neighbors(self, groups, j: int) -> List[int]:
        return groups.get((S, j), []) + groups.get((A, j), [])

    def _path_to_outside(self, f: Frame, anchor: int, q: List[int], trace) -> StepResult:
        g = self.g
        v, w = q[0], q[-1]
        groups = self._groups(f, w)
        touched = [j for j in (2, 3, 4) if self._group_neighbors(groups, j)]
        p_anchor = f.path(1, anchor)

        if len(touched) == 3:
            if w != v:
                raise AugmentationError(f"Vertex {w} outside A touches three groups")
            ends = [f.nearest(j, self._group_neighbors(groups, j)) for j in (2, 3, 4)]
            return self._tree([p_anchor, [v]] + [f.path(j, a) for j, a in zip((2, 3, 4), ends)],
                              "cubic-three-groups", trace)

        if len(touched) == 2:
            if w != v:
                raise AugmentationError(f"Vertex {w} outside A touches two groups")
            missing = next(j for j in (2, 3, 4) if j not in touched)
            f = Frame(self.state, [f.idx(1), f.idx(touched[0]), f.idx(touched[1]), f.idx(missing)])
            if not f.S(7):
                f = f.swapped(2, 3)
            trace["symmetry"] = list(f.perm)
            groups = self._groups(f, v)
            a2 = f.nearest(2, self._group_neighbors(groups, 2))
            a3 = f.nearest(3, self._group_neighbors(groups, 3))
            s7 = min(f.S(7))
            s4 = min(f.S(4))
            if not g.has_edge(v, s7):
                s2 = a2 if a2 in f.S(2) else min(f.S(2))
                t2 = self._three(f.x(2), v, s2, f.A(2) | {v, s2})
                return self._tree([p_anchor, t2, f.path(3, a3), f.path(4, s4), [s7]],
                                  "cubic-two-groups-via-tree", trace)
            return self._tree([p_anchor, [v], f.path(2, a2), f.path(3, a3), f.path(4, s4), [s7]],
                              "cubic-two-groups-via-s7", trace)

        if len(touched) == 1:
            rest = [j for j in (2, 3, 4) if j != touched[0]]
            f = Frame(self.state, [f.idx(1), f.idx(touched[0]), f.idx(rest[0]), f.idx(rest[1])])
            trace["symmetry"] = list(f.perm)
            return self._one_group(f, anchor, p_anchor, q, trace)

        fifth = groups.get((S, 5), [])
        if not fifth:
            raise AugmentationError(f"Vertex {w} was reached as an outside vertex without outside neighbors")
        return self._tree([p_anchor, q, f.path(2, min(f.S(2))), f.path(3, min(f.S(3))),
                           f.path(4, min(f.S(4))), [min(fifth)]], "cubic-s5-only", trace)

    def _one_group(self, f: Frame, anchor: int, p_anchor: List[int], q: List[int], trace) -> StepResult:
        g = self.g
        w = q[-1]
        groups = self._groups(f, w)
        s3, s4 = min(f.S(3)), min(f.S(4))

        for u in q:
            sixth = neighbors_in(g, u, f.S(6))
            if sixth:
                s6 = min(sixth)
                within = f.A(1) | set(q) | f.S(2) | f.A(2) | {s6}
                t6 = self._three(f.x(1), f.x(2), s6, within)
                return self._tree([t6, f.path(3, s3), f.path(4, s4)], "cubic-one-group-via-s6", trace)

        own = groups.get((S, 2), [])
        s2 = min(own) if own else min(f.S(2))
        t2 = self._three(w, s2, f.x(2), f.A(2) | {s2, w})

        if f.S(5):
            s5 = min(f.S(5))
            if not g.has_edge(w, s5):
                return self._tree([p_anchor, q, t2, f.path(3, s3), f.path(4, s4), [s5]],
                                  "cubic-one-group-via-s5", trace)
            a2 = f.nearest(2, groups.get((A, 2), []))
            if a2 is None:
                raise AugmentationError(f"Vertex {w} is adjacent to S5 and S2")
            return self._tree([p_anchor, q, f.path(2, a2), f.path(3, s3), f.path(4, s4), [s5]],
                              "cubic-one-group-through-s5", trace)

        lower = f.S(7) | f.S(8)
        contact = next((i for i, u in enumerate(q) if touches(g, u, lower)), None)
        if contact is None:
            return self._tree([p_anchor, q, t2, f.path(3, s3), f.path(4, s4), [min(f.S(7)), min(f.S(8))]],
                              "cubic-one-group-via-s7-s8", trace)

        u = q[contact]
        if not touches(g, u, f.S(7)):
            f = f.swapped(3, 4)
            trace["symmetry"] = list(f.perm)
            s3, s4 = min(f.S(3)), min(f.S(4))
        s7 = min(neighbors_in(g, u, f.S(7)))
        s6 = min(f.S(6))
        segment = q[:contact + 1]
        p_s2 = f.path(2, min(f.S(2)))
        on_s2 = set(p_s2)
        if any(touches(g, x, on_s2) for x in segment):
            if u != w:
                raise AugmentationError(f"Vertex {u} touches the S2 path before the end of Q")
            a2 = f.nearest(2, self._groups(f, w).get((A, 2), []))
            if a2 is None:
                raise AugmentationError(f"Vertex {w} is adjacent to S7 and S2")
            return self._tree([p_anchor, q, f.path(2, a2), f.path(3, s3), f.path(4, s4), [s6, s7]],
                              "cubic-one-group-a2-and-s7", trace)
        return self._tree([p_anchor, segment, p_s2, f.path(3, s3), f.path(4, s4), [s6, s7]],
                          "cubic-one-group-to-s7", trace)

    def _partial_lower(self, f: Frame, anchor: int, q: List[int], trace) -> StepResult:
        g = self.g
        w = q[-1]
        adjacent = neighbors_in(g, w, f.S(6) | f.S(7) | f.S(8))
        with_neighbor = [j for j in (2, 3, 4) if any(x in f.S(j + 4) for x in adjacent)]
        with_gap = [k for k in (2, 3, 4) if f.S(k + 4) - set(adjacent)]
        pair = next(((j, k) for j in with_neighbor for k in with_gap if j != k), None)
        if pair is None:
            raise AugmentationError(f"Vertex {w} has no usable pair of lower parts")
        j, k = pair
        rest = next(x for x in (2, 3, 4) if x not in pair)
        f = Frame(self.state, [f.idx(1), f.idx(k), f.idx(j), f.idx(rest)])
        trace["symmetry"] = list(f.perm)
        s7 = min(neighbors_in(g, w, f.S(7)))
        s6 = min(f.S(6) - set(adjacent))
        return self._tree([f.path(1, anchor), q, f.path(2, min(f.S(2))), f.path(3, min(f.S(3))),
                           f.path(4, min(f.S(4))), [s6, s7]], "cubic-partial-lower", trace)

    # v is complete to three of S1..S4

    def _opposite(self, v: int, missing: int, trace) -> StepResult:
        g = self.g
        others = [i for i in range(4) if i != missing]
        f = Frame.ordered(self.state, others + [missing])
        trace.update(symmetry=list(f.perm))

        q = bfs_until(
            g,
            v,
            lambda u: (u == v or self._in_b_or_r(u)) and touches(g, u, f.S(4)),
            self._in_b_or_r,
        )
        if q is not None:
            trace["q_path"] = q
            s4 = min(neighbors_in(g, q[-1], f.S(4)))
            pieces = [f.path(4, s4), q] + [f.path(j, min(f.S(j))) for j in (1, 2, 3)]
            return self._tree(pieces, "cubic-opposite-path", trace)

        reach = self._reach(v)
        evicted = sorted(u for u in reach if u in f.B(4))
        for u in evicted:
            f.place(u, R)
        f.place(v, S, 8)
        trace.update(branch="opposite-absorb", reach=sorted(reach), reach_third=evicted)
        return StepResult(OutcomeKind.GREW_CUBIC, trace=trace)

    # every other vertex

    def _between(self, v: int, trace) -> StepResult:
        g = self.g
        f = Frame(self.state)
        reach = self._reach(v)
        labels: Dict[int, Set[int]] = {}
        for u in reach:
            found = set()
            for w in g.neighbors(u):
                label = f.label(w)
                if label is not None and label[0] == S:
                    found.add(label[1])
            labels[u] = found

        searches = {k: self._multi_source(reach, [u for u in reach if k in labels[u]]) for k in range(1, 9)}
        best = None
        for index, (i, j) in enumerate(PAIRS):
            dist, _ = searches[i]
            for w in reach:
                if j in labels[w] and w in dist:
                    key = (dist[w], index, w)
                    if best is None or key < best:
                        best = key

        if best is None:
            upper = sorted(k for u in reach for k in labels[u] if k <= 4)
            kinds = sorted(set(upper))
            if len(kinds) > 1:
                raise AugmentationError(f"Reach set of {v} touches S{kinds} without a conflicting path")
            for u in reach:
                if kinds:
                    f.place(u, B, kinds[0])
                else:
                    f.place(u, R)
            trace.update(branch="between-absorb" if kinds else "between-to-r", reach=sorted(reach))
            return StepResult(OutcomeKind.GREW_CUBIC, trace=trace)

        _, index, w = best
        i, j = PAIRS[index]
        _, parent = searches[i]
        q = [w]
        while parent[q[-1]] != q[-1]:
            q.append(parent[q[-1]])
        q.reverse()
        trace.update(q_path=q, reach=sorted(reach))

        if q == [v]:
            upper = sorted(k for k in labels[v] if k <= 4)
            if len(upper) == 4:
                pieces = [[v]] + [f.path(k, min(neighbors_in(g, v, f.S(k)))) for k in range(1, 5)]
                return self._tree(pieces, "between-four-neighbors", trace)
            if len(upper) == 3:
                return self._three_neighbors(v, upper, trace)
        return self._conflict(q, i, j, trace)

    def _multi_source(self, reach: Set[int], sources: Sequence[int]) -> Tuple[Dict[int, int], Dict[int, int]]:
        dist = {u: 0 for u in sources}
        parent = {u: u for u in sources}
        queue = deque(sorted(sources))
        while queue:
            u = queue.popleft()
            for w in self.g.neighbors(u):
                if w in reach and w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
        return dist, parent

    def _three_neighbors(self, v: int, upper: List[int], trace) -> StepResult:
        g = self.g
        identity = Frame(self.state)
        missing = next(k for k in range(1, 5) if k not in upper)
        partial = [k for k in upper if identity.S(k) - g.neighbor_set(v)]
        if not partial:
            raise AugmentationError(f"Vertex {v} is complete to three S parts outside the opposite branch")
        t = partial[0]
        middle = [k for k in upper if k != t]
        f = Frame.ordered(self.state, [identity.idx(t), identity.idx(middle[0]), identity.idx(middle[1]),
                                       identity.idx(missing)])
        if not f.S(6):
            f = f.swapped(2, 3)
        trace["symmetry"] = list(f.perm)
        s1 = min(f.S(1) - g.neighbor_set(v))
        s2 = min(neighbors_in(g, v, f.S(2)))
        s3 = min(neighbors_in(g, v, f.S(3)))
        pieces = [f.path(1, s1), f.path(2, s2), f.path(3, s3), f.path(4, min(f.S(4))), [v, min(f.S(6))]]
        return self._tree(pieces, "between-three-neighbors", trace)

    def _conflict(self, q: List[int], i: int, j: int, trace) -> StepResult:
        g = self.g
        identity = Frame(self.state)
        u, w = q[0], q[-1]
        if j <= 4:
            rest = [k for k in range(1, 5) if k not in (i, j)]
            f = Frame.ordered(self.state, [identity.idx(k) for k in [i, j] + rest])
            trace["symmetry"] = list(f.perm)
            s1 = min(neighbors_in(g, u, f.S(1)))
            s2 = min(neighbors_in(g, w, f.S(2)))
            extra = min(f.S(5)) if f.S(5) else min(f.S(6))
            pieces = [f.path(1, s1), f.path(2, s2), f.path(3, min(f.S(3))), f.path(4, min(f.S(4))), q, [extra]]
            return self._tree(pieces, "between-upper-pair", trace)

        rest = [k for k in range(1, 5) if k != i]
        f = Frame.ordered(self.state, [identity.idx(k) for k in [i] + rest])
        trace["symmetry"] = list(f.perm)
        s1 = min(neighbors_in(g, u, f.S(1)))
        s5 = min(neighbors_in(g, w, f.S(5)))
        pieces = [f.path(1, s1), f.path(2, min(f.S(2))), f.path(3, min(f.S(3))), f.path(4, min(f.S(4))), q, [s5]]
        return self._tree(pieces, "between-opposite-pair", trace)


def _grow(g: Graph, split: CubicSplit, domain: Set[int], v: int) -> CubicAugmentOutcome:
    state = CubicState.from_split(g, split)
    result = CubicAugmenter(g, state).step(v)
    trace = CubicAugmentTrace(**result.trace)

    if result.kind == OutcomeKind.FOUND_TREE:
        return CubicAugmentOutcome(
            kind=result.kind,
            tree=InducedTree(vertices=sorted(result.tree), required=split.terminals),
            trace=trace,
        )
    grown = state.to_split()
    violations = validate_cubic(g, grown, domain | {v})
    if violations:
        raise AugmentationError(f"Grown cubic split is invalid: {violations[0]}")
    return CubicAugmentOutcome(kind=result.kind, split=grown, domain=sorted(domain | {v}), trace=trace)


def _grow_with_gadget(g: Graph, split: CubicSplit, domain: Set[int], v: int) -> CubicAugmentOutcome:
    from .solver import SolverError, solve_within

    grown = domain | {v}
    try:
        answer = solve_within(g, grown, split.terminals)
    except SolverError as e:
        raise AugmentationError(str(e))
    trace = CubicAugmentTrace(v=v, branch="non-pendant-terminal")

    if isinstance(answer, InducedTree):
        return CubicAugmentOutcome(kind=OutcomeKind.FOUND_TREE, tree=answer, trace=trace)
    if not isinstance(answer, CubicSplit):
        raise AugmentationError(f"G[domain + {v}] has no covering tree but only a {answer.kind} split was found")
    violations = validate_cubic(g, answer, grown)
    if violations:
        raise AugmentationError(f"Split of G[domain + {v}] is invalid: {violations[0]}")
    return CubicAugmentOutcome(kind=OutcomeKind.GREW_CUBIC, split=answer, domain=sorted(grown), trace=trace)


def augment_cubic(g: Graph, split: CubicSplit, domain: VertexSet, v: int) -> CubicAugmentOutcome:
    """
    Add v to a cubic split of G[domain].

    Terminals of degree above one are handled as in augment_square: if the
    case analysis cannot place v, G[domain + v] is solved with pendants attached.

    Args:
        g: A triangle-free graph
        split: Valid cubic split of G[domain]
        domain: The split's domain
        v: A vertex outside the domain

    Returns:
        CubicAugmentOutcome: FoundTree or GrewCubic with its trace

    Raises:
        AugmentationError: If the input split is invalid, v is not admissible,
            or a terminal of degree above one leaves neither a tree nor a cubic split
    """
    domain = set(domain)
    violations = validate_cubic(g, split, domain)
    if violations:
        raise AugmentationError(f"Invalid cubic split: {violations[0]}")
    _check_input(g, v, domain)

    try:
        return _grow(g, split, domain, v)
    except AugmentationError as e:
        if terminals_are_pendant(g, split.terminals, domain | {v}):
            raise
        logger.info("cubic step at %d stopped on a terminal of degree above one (%s)", v, e)
        return _grow_with_gadget(g, split, domain, v)
