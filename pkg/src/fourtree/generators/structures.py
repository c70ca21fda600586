from pydantic import BaseModel, Field, field_validator, model_validator
from typing import Dict, List, Set, Tuple
import random
import logging

from .random_graphs import GeneratorError
from ..core.graph import Graph, build_graph, find_triangle
from ..core.validator import validate_cubic, validate_square
from ..models.certificate import CubicSplit, SquareSplit
from ..models.result import Terminals

logger = logging.getLogger(__name__)


class SquareSizes(BaseModel):
    """Part sizes of a generated square structure"""
    a: List[int] = Field(default_factory=lambda: [1, 1, 1, 1], description="|A1|..|A4|, each at least 1")
    s: List[int] = Field(default_factory=lambda: [1, 1, 1, 1], description="|S1|..|S4|, each at least 1")
    r: int = Field(0, ge=0, description="|R|")

    @field_validator("a", "s")
    @classmethod
    def validate_four_positive(cls, v):
        if len(v) != 4 or any(size < 1 for size in v):
            raise ValueError(f"Four sizes of at least 1 are required, got {v}")
        return v


class CubicSizes(BaseModel):
    """Part sizes of a generated cubic structure"""
    a: List[int] = Field(default_factory=lambda: [1, 1, 1, 1], description="|A1|..|A4|, each at least 1")
    b: List[int] = Field(default_factory=lambda: [0, 0, 0, 0], description="|B1|..|B4|")
    s: List[int] = Field(default_factory=lambda: [1] * 8, description="|S1|..|S8|")
    r: int = Field(0, ge=0, description="|R|")

    @field_validator("a")
    @classmethod
    def validate_a(cls, v):
        if len(v) != 4 or any(size < 1 for size in v):
            raise ValueError(f"Four A sizes of at least 1 are required, got {v}")
        return v

    @field_validator("b")
    @classmethod
    def validate_b(cls, v):
        if len(v) != 4 or any(size < 0 for size in v):
            raise ValueError(f"Four non-negative B sizes are required, got {v}")
        return v

    @model_validator(mode="after")
    def check_s(self):
        # 1. Check arity
        if len(self.s) != 8 or any(size < 0 for size in self.s):
            raise ValueError(f"Eight non-negative S sizes are required, got {self.s}")
        # 2. Check S1..S4 are nonempty
        if any(size < 1 for size in self.s[:4]):
            raise ValueError(f"S1..S4 must be nonempty, got {self.s[:4]}")
        # 3. Check at most one lower part is empty
        if sum(1 for size in self.s[4:] if size == 0) > 1:
            raise ValueError(f"At most one of S5..S8 may be empty, got {self.s[4:]}")
        return self


class _Builder:
    """Numbers vertices block by block and collects edges."""

    def __init__(self, seed: int):
        self.rng = random.Random(seed)
        self.n = 0
        self.edges: Set[Tuple[int, int]] = set()

    def block(self, size: int) -> List[int]:
        ids = list(range(self.n, self.n + size))
        self.n += size
        return ids

    def edge(self, u: int, v: int) -> None:
        self.edges.add((min(u, v), max(u, v)))

    def complete(self, x: List[int], y: List[int]) -> None:
        for u in x:
            for v in y:
                self.edge(u, v)

    def pick(self, pool: List[int]) -> List[int]:
        """A random nonempty subset of pool."""
        chosen = [u for u in pool if self.rng.random() < 0.5]
        return chosen or [self.rng.choice(pool)]

    def a_part(self, block: List[int], s_part: List[int], inner_p: float) -> None:
        """
        Connected G[A] with the terminal block[0] as a leaf, wired to every vertex of s_part.

        G[A] is a random tree plus extra edges across its 2-colouring, and
        each S vertex sees vertices of a single colour class only.
        """
        if len(block) == 1:
            self.complete(block, s_part)
            return
        inner = block[1:]
        self.edge(block[0], inner[0])
        depth: Dict[int, int] = {inner[0]: 0}
        for k, u in enumerate(inner[1:], start=1):
            parent = inner[self.rng.randrange(k)]
            self.edge(u, parent)
            depth[u] = depth[parent] + 1
        for i, u in enumerate(inner):
            for v in inner[i + 1:]:
                if (depth[u] + depth[v]) % 2 == 1 and self.rng.random() < inner_p:
                    self.edge(u, v)
        classes = [[u for u in inner if depth[u] % 2 == parity] for parity in (0, 1)]
        for s in s_part:
            pool = [c for c in classes if c]
            self.complete([s], self.pick(self.rng.choice(pool)))

    def graph(self) -> Graph:
        return build_graph(self.n, sorted(self.edges))


def _finish(g: Graph, kind: str) -> None:
    triangle = find_triangle(g)
    if triangle is not None:
        raise GeneratorError(f"Generated {kind} structure contains triangle {triangle}")


def gen_square_structure(sizes: SquareSizes, inner_p: float, seed: int) -> Tuple[Graph, Terminals, SquareSplit]:
    """
    Random graph whose whole vertex set carries a valid square split.

    Vertices are numbered S1..S4, then A1..A4 (terminal first in each block),
    then R. With every size 1 the result is C4 with a pendant vertex on each
    cycle vertex.

    Args:
        sizes: Part sizes
        inner_p: Probability of each extra edge inside an A part
        seed: Random seed

    Returns:
        Tuple[Graph, Terminals, SquareSplit]: Graph, terminals x1..x4 and the split

    Raises:
        GeneratorError: If the generated instance fails its own checks
    """
    builder = _Builder(seed)
    s_parts = [builder.block(size) for size in sizes.s]
    a_parts = [builder.block(size) for size in sizes.a]
    r_part = builder.block(sizes.r)

    for i in range(4):
        builder.complete(s_parts[i], s_parts[(i + 1) % 4])
        builder.a_part(a_parts[i], s_parts[i], inner_p)
    for u in r_part:
        # S1 u S3 and S2 u S4 are the two stable sides of the S layer
        side = builder.rng.randrange(2)
        pool = s_parts[side] + s_parts[side + 2]
        builder.complete([u], [w for w in pool if builder.rng.random() < 0.5])

    g = builder.graph()
    _finish(g, "square")
    terminals = [part[0] for part in a_parts]
    split = SquareSplit(a_parts=a_parts, s_parts=s_parts, r_part=r_part, terminals=terminals)
    violations = validate_square(g, split)
    if violations:
        raise GeneratorError(f"Generated square split is invalid: {violations[0]}")
    return g, Terminals(vertices=terminals), split


def gen_cubic_structure(sizes: CubicSizes, inner_p: float, seed: int) -> Tuple[Graph, Terminals, CubicSplit]:
    """
    Random graph whose whole vertex set carries a valid cubic split.

    Vertices are numbered S1..S8, then A1..A4, then B1..B4, then R.

    Raises:
        GeneratorError: If the generated instance fails its own checks
    """
    builder = _Builder(seed)
    s_parts = [builder.block(size) for size in sizes.s]
    a_parts = [builder.block(size) for size in sizes.a]
    b_parts = [builder.block(size) for size in sizes.b]
    r_part = builder.block(sizes.r)

    for i in range(4):
        for j in range(4):
            if i != j:
                builder.complete(s_parts[i], s_parts[j + 4])
        builder.a_part(a_parts[i], s_parts[i], inner_p)

    for i in range(4):
        lower = [u for j in range(4) if j != i for u in s_parts[j + 4]]
        for u in b_parts[i]:
            # S_i is complete to these lower parts, so one side only
            pool = s_parts[i] if not lower or builder.rng.random() < 0.5 else lower
            builder.complete([u], [w for w in pool if builder.rng.random() < 0.5])
    every_lower = [u for part in s_parts[4:] for u in part]
    for u in r_part:
        builder.complete([u], [w for w in every_lower if builder.rng.random() < 0.5])

    g = builder.graph()
    _finish(g, "cubic")
    terminals = [part[0] for part in a_parts]
    split = CubicSplit(a_parts=a_parts, b_parts=b_parts, s_parts=s_parts, r_part=r_part, terminals=terminals)
    violations = validate_cubic(g, split)
    if violations:
        raise GeneratorError(f"Generated cubic split is invalid: {violations[0]}")
    return g, Terminals(vertices=terminals), split
