from pydantic import BaseModel, Field
from typing import List, Optional, Sequence, Tuple
import time
import logging

import numpy as np
import pandas as pd

from ..core.graph import Graph
from ..core.solver import four_in_a_tree
from ..generators.random_graphs import GeneratorError, gen_bipartite, gen_query
from ..generators.structures import CubicSizes, SquareSizes, gen_cubic_structure, gen_square_structure
from ..utils.config import get_config

logger = logging.getLogger(__name__)

FAMILIES = ("bipartite", "square", "cubic")


class BenchRow(BaseModel):
    """Timing of one solver run"""
    family: str = Field("bipartite", description="Instance family")
    n: int = Field(..., description="Vertex count")
    m: int = Field(..., description="Edge count")
    seconds: float = Field(..., description="Wall time of four_in_a_tree")
    answer: str = Field(..., description="tree or no-tree")
    steps: int = Field(..., description="Augmentation steps")


class BenchReport(BaseModel):
    """Bench rows and the fitted scaling exponent"""
    rows: List[BenchRow] = Field(default_factory=list, description="One row per size")
    exponent: Optional[float] = Field(None, description="Slope of log(seconds) against log(n*m)")

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([row.model_dump() for row in self.rows], columns=list(BenchRow.model_fields))


def fit_exponent(rows: Sequence[BenchRow]) -> Optional[float]:
    """Least-squares slope in log-log scale; None with fewer than two usable sizes."""
    usable = [row for row in rows if row.seconds > 0 and row.n * row.m > 0]
    if len({row.n for row in usable}) < 2:
        return None
    x = np.log([row.n * row.m for row in usable])
    y = np.log([row.seconds for row in usable])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def _a_sizes(total: int) -> List[int]:
    """Four A sizes summing to total, the remainder going to A1."""
    share = total // 4
    return [total - 3 * share, share, share, share]


def _inner_p(a_sizes: Sequence[int], factor: float) -> float:
    """Extra-edge probability giving roughly factor edges per A vertex."""
    largest = max(a_sizes)
    if largest < 3:
        return 0.0
    # about largest**2 / 4 pairs cross the 2-colouring of one A part
    return min(1.0, 4 * max(factor - 1.0, 0.0) / largest)


def _instance(family: str, n: int, factor: float, seed: int) -> Tuple[Graph, List[int]]:
    """
    One bench graph and its query.

    The structure families carry a split over the whole vertex set, so the
    answer is always no-tree and the solver augments through the whole
    component of the terminals.
    The query is the structure's terminals.
    """
    if family == "bipartite":
        halves = (n // 2) * ((n + 1) // 2)
        g = gen_bipartite(n, min(int(factor * n), halves), seed)
        return g, gen_query(g, seed)
    if family == "square":
        r = max(n - 8, 0) // 10
        a = _a_sizes(n - 4 - r)
        if min(a) < 1:
            raise GeneratorError(f"A square bench instance needs at least 8 vertices, got {n}")
        g, terminals, _ = gen_square_structure(SquareSizes(a=a, s=[1, 1, 1, 1], r=r), _inner_p(a, factor), seed)
        return g, terminals.vertices
    if family == "cubic":
        r = max(n - 12, 0) // 10
        a = _a_sizes(n - 8 - r)
        if min(a) < 1:
            raise GeneratorError(f"A cubic bench instance needs at least 12 vertices, got {n}")
        g, terminals, _ = gen_cubic_structure(CubicSizes(a=a, s=[1] * 8, r=r), _inner_p(a, factor), seed)
        return g, terminals.vertices
    raise GeneratorError(f"Unknown bench family {family!r}; expected one of {', '.join(FAMILIES)}")


def run_bench(
    sizes: Sequence[int],
    seed: int = 0,
    edge_factor: Optional[float] = None,
    family: str = "bipartite",
) -> BenchReport:
    """
    Time the solver on one instance per size.

    Args:
        sizes: Vertex counts
        seed: Generator seed
        edge_factor: Edges per vertex; defaults to Config.bench_edge_factor
        family: "bipartite" for random bipartite graphs with m = edge_factor * n,
            "square" or "cubic" for structures that have no covering tree

    Raises:
        GeneratorError: If the family is unknown or a size is too small for it
    """
    factor = get_config().bench_edge_factor if edge_factor is None else edge_factor
    rows = []
    for n in sizes:
        g, query = _instance(family, n, factor, seed)
        start = time.perf_counter()
        result = four_in_a_tree(g, *query)
        seconds = time.perf_counter() - start
        rows.append(BenchRow(
            family=family, n=g.n, m=g.m, seconds=seconds, answer=result.answer.value, steps=result.steps
        ))
        logger.info("bench %s n=%d m=%d: %.4fs (%s, %d steps)",
                    family, g.n, g.m, seconds, result.answer.value, result.steps)
    return BenchReport(rows=rows, exponent=fit_exponent(rows))
