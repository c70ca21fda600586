from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple
import logging

from .graph import Graph, is_induced_tree
from ..models.certificate import CubicSplit, SquareSplit
from ..models.result import OutcomeKind

logger = logging.getLogger(__name__)

A, B, S, R = "A", "B", "S", "R"


class AugmentationError(Exception):
    """Custom exception for augmentation steps that cannot proceed"""
    pass


class TerminalPaths:
    """
    Shortest paths from vertices of S_i or A_i to the terminal x_i with interior in A_i.

    One BFS from x_i inside G[A_i] is kept per index and dropped when A_i changes.
    A vertex outside A_i reaches x_i through its A_i-neighbor of smallest
    distance, ties broken by id.
    """

    def __init__(self, g: Graph, a_parts: Sequence[Set[int]], terminals: Sequence[int]):
        self._g = g
        self._a_parts = a_parts
        self._terminals = terminals
        self._trees: Dict[int, Tuple[Dict[int, int], Dict[int, int]]] = {}

    def invalidate(self, i: int) -> None:
        self._trees.pop(i, None)

    def _tree(self, i: int) -> Tuple[Dict[int, int], Dict[int, int]]:
        if i not in self._trees:
            part = self._a_parts[i]
            root = self._terminals[i]
            dist = {root: 0}
            parent = {root: root}
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in self._g.neighbors(u):
                    if w in part and w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
            self._trees[i] = (dist, parent)
        return self._trees[i]

    def entry(self, i: int, u: int) -> Optional[int]:
        """The A_i-neighbor through which u reaches x_i, or None."""
        dist, _ = self._tree(i)
        best = None
        for w in self._g.neighbors(u):
            if w in dist and (best is None or dist[w] < dist[best]):
                best = w
        return best

    def dist(self, i: int, u: int) -> Optional[int]:
        """Number of edges on the path from u to x_i."""
        dist, _ = self._tree(i)
        if u in dist:
            return dist[u]
        via = self.entry(i, u)
        return None if via is None else dist[via] + 1

    def path(self, i: int, u: int) -> List[int]:
        """u ... x_i with interior in A_i."""
        dist, parent = self._tree(i)
        if u in dist:
            start = u
            walk = []
        else:
            start = self.entry(i, u)
            if start is None:
                raise AugmentationError(f"Vertex {u} has no neighbor in A{i + 1}")
            walk = [u]
        while True:
            walk.append(start)
            if parent[start] == start:
                return walk
            start = parent[start]


class SplitState:
    """Mutable split used inside one solver run; parts are indexed from 0."""

    s_count = 4
    b_count = 0

    def __init__(self, g: Graph, terminals: Sequence[int]):
        self.g = g
        self.terminals = list(terminals)
        self.a: List[Set[int]] = [set() for _ in range(4)]
        self.b: List[Set[int]] = [set() for _ in range(self.b_count)]
        self.s: List[Set[int]] = [set() for _ in range(self.s_count)]
        self.r: Set[int] = set()
        self.where: Dict[int, Tuple[str, int]] = {}
        self.paths = TerminalPaths(g, self.a, self.terminals)

    def _part(self, kind: str, index: int) -> Set[int]:
        if kind == A:
            return self.a[index]
        if kind == B:
            return self.b[index]
        if kind == S:
            return self.s[index]
        return self.r

    def place(self, u: int, kind: str, index: int = -1) -> None:
        """Put u in the given part, moving it out of its current part if needed."""
        old = self.where.get(u)
        if old is not None:
            self._part(*old).discard(u)
            if old[0] == A:
                self.paths.invalidate(old[1])
        self._part(kind, index).add(u)
        self.where[u] = (kind, index)
        if kind == A:
            self.paths.invalidate(index)

    def remove(self, u: int) -> None:
        old = self.where.pop(u)
        self._part(*old).discard(u)
        if old[0] == A:
            self.paths.invalidate(old[1])

    def domain(self) -> Set[int]:
        return set(self.where)

    def __contains__(self, u: int) -> bool:
        return u in self.where

    def __len__(self) -> int:
        return len(self.where)


class SquareState(SplitState):
    s_count = 4
    b_count = 0

    @classmethod
    def from_split(cls, g: Graph, split: SquareSplit) -> "SquareState":
        state = cls(g, split.terminals)
        for i in range(4):
            for u in split.a_parts[i]:
                state.place(u, A, i)
            for u in split.s_parts[i]:
                state.place(u, S, i)
        for u in split.r_part:
            state.place(u, R)
        return state

    def to_split(self) -> SquareSplit:
        return SquareSplit(
            a_parts=[sorted(p) for p in self.a],
            s_parts=[sorted(p) for p in self.s],
            r_part=sorted(self.r),
            terminals=self.terminals,
        )


class CubicState(SplitState):
    s_count = 8
    b_count = 4

    @classmethod
    def from_split(cls, g: Graph, split: CubicSplit) -> "CubicState":
        state = cls(g, split.terminals)
        for i in range(4):
            for u in split.a_parts[i]:
                state.place(u, A, i)
            for u in split.b_parts[i]:
                state.place(u, B, i)
        for k in range(8):
            for u in split.s_parts[k]:
                state.place(u, S, k)
        for u in split.r_part:
            state.place(u, R)
        return state

    def to_split(self) -> CubicSplit:
        return CubicSplit(
            a_parts=[sorted(p) for p in self.a],
            b_parts=[sorted(p) for p in self.b],
            s_parts=[sorted(p) for p in self.s],
            r_part=sorted(self.r),
            terminals=self.terminals,
        )


class Frame:
    """
    Relabelled view of a split: normalized index j in 1..4 reads stored index perm[j - 1].

    For cubic splits S_{j+4} follows S_j, so one permutation of 1..4 acts on
    A, B, S1..S4 and S5..S8 at once.
    """

    def __init__(self, state: SplitState, perm: Sequence[int] = (0, 1, 2, 3)):
        if sorted(perm) != [0, 1, 2, 3]:
            raise AugmentationError(f"Not a permutation of the four indices: {perm}")
        self.state = state
        self.perm = tuple(perm)
        self._inverse = {stored: j + 1 for j, stored in enumerate(self.perm)}

    @classmethod
    def rotated(cls, state: SplitState, first: int) -> "Frame":
        """Rotation of the square that brings stored index `first` to position 1."""
        return cls(state, [(first + j) % 4 for j in range(4)])

    @classmethod
    def ordered(cls, state: SplitState, order: Sequence[int]) -> "Frame":
        """Frame whose normalized indices 1..4 read the stored indices in `order`."""
        return cls(state, order)

    def swapped(self, p: int, q: int) -> "Frame":
        perm = list(self.perm)
        perm[p - 1], perm[q - 1] = perm[q - 1], perm[p - 1]
        return Frame(self.state, perm)

    def idx(self, j: int) -> int:
        return self.perm[j - 1]

    def x(self, j: int) -> int:
        return self.state.terminals[self.idx(j)]

    def A(self, j: int) -> Set[int]:
        return self.state.a[self.idx(j)]

    def B(self, j: int) -> Set[int]:
        return self.state.b[self.idx(j)]

    def S(self, j: int) -> Set[int]:
        if j > 4:
            return self.state.s[self.idx(j - 4) + 4]
        return self.state.s[self.idx(j)]

    def stored_s(self, j: int) -> int:
        """Stored position of normalized S_j."""
        return self.idx(j - 4) + 4 if j > 4 else self.idx(j)

    def label(self, u: int) -> Optional[Tuple[str, int]]:
        """Normalized (kind, index) of u, index 0 for R, None outside the domain."""
        found = self.state.where.get(u)
        if found is None:
            return None
        kind, stored = found
        if kind == R:
            return R, 0
        if kind == S and stored >= 4:
            return S, self._inverse[stored - 4] + 4
        return kind, self._inverse[stored]

    def normalized(self, stored: int) -> int:
        return self._inverse[stored]

    def path(self, j: int, u: int) -> List[int]:
        return self.state.paths.path(self.idx(j), u)

    def dist(self, j: int, u: int) -> Optional[int]:
        return self.state.paths.dist(self.idx(j), u)

    def nearest(self, j: int, candidates: Iterable[int]) -> Optional[int]:
        """Candidate with the shortest path to x_j, ties by id."""
        best = None
        best_key = None
        for u in candidates:
            d = self.dist(j, u)
            if d is None:
                continue
            key = (d, u)
            if best_key is None or key < best_key:
                best, best_key = u, key
        return best

    def place(self, u: int, kind: str, j: int = 0) -> None:
        """Place u using a normalized index (S indices 1..8)."""
        if kind == R:
            self.state.place(u, R)
        elif kind == S:
            self.state.place(u, S, self.stored_s(j))
        else:
            self.state.place(u, kind, self.idx(j))


def neighbors_in(g: Graph, u: int, part: Set[int]) -> List[int]:
    return [w for w in g.neighbors(u) if w in part]


def touches(g: Graph, u: int, part: Set[int]) -> bool:
    return any(w in part for w in g.neighbors(u))


def certify_tree(g: Graph, pieces: Iterable[Iterable[int]], terminals: Sequence[int], case: str) -> Set[int]:
    """
    Union the pieces and check the result is an induced tree covering the terminals.

    Raises:
        AugmentationError: If the constructed set fails either check
    """
    vertices: Set[int] = set()
    for piece in pieces:
        vertices.update(piece)
    if not set(terminals) <= vertices or not is_induced_tree(g, vertices):
        raise AugmentationError(f"{case}: constructed set {sorted(vertices)[:12]} is not a tree covering the terminals")
    logger.debug("tree found by case %s with %d vertices", case, len(vertices))
    return vertices


@dataclass
class StepResult:
    """Internal outcome of absorbing one vertex"""
    kind: OutcomeKind
    tree: Optional[Set[int]] = None
    cubic: Optional["CubicState"] = None
    evicted: Set[int] = field(default_factory=set)
    trace: Dict[str, object] = field(default_factory=dict)


def terminals_are_pendant(g: Graph, terminals: Sequence[int], domain: Set[int]) -> bool:
    """True when every terminal has exactly one neighbor inside domain."""
    return all(sum(1 for u in g.neighbors(x) if u in domain) == 1 for x in terminals)
