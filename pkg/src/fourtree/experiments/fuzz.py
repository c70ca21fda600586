from pydantic import BaseModel, Field
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple
import random
import logging

import pandas as pd

from ..core.graph import Graph
from ..core.solver import attach_terminals, four_in_a_tree
from ..core.validator import validate_certificate, validate_tree
from ..formats.graph_text import GraphDocument, write_graph_file
from ..generators.random_graphs import gen_connected_triangle_free, gen_query
from ..models.result import SolveResult
from ..oracle.brute_force import brute_force_tree

logger = logging.getLogger(__name__)

Solver = Callable[[Graph, int, int, int, int], SolveResult]


class FuzzCase(BaseModel):
    """One solver-versus-oracle comparison"""
    index: int = Field(..., description="Case number")
    seed: int = Field(..., description="Seed the instance was generated from")
    n: int = Field(..., description="Vertex count")
    m: int = Field(..., description="Edge count")
    query: List[int] = Field(..., description="Query vertices")
    solver_found: Optional[bool] = Field(None, description="Solver decision, None when it raised")
    oracle_found: bool = Field(..., description="Exhaustive decision")
    certified: bool = Field(False, description="Returned tree or certificate passed its validator")
    error: Optional[str] = Field(None, description="Exception raised by the solver")

    @property
    def ok(self) -> bool:
        return self.error is None and self.certified and self.solver_found == self.oracle_found


class FuzzReport(BaseModel):
    """All cases of a fuzz run in index order"""
    cases: List[FuzzCase] = Field(default_factory=list, description="Cases by index")
    counterexample_path: Optional[str] = Field(None, description="File holding the minimized failing instance")

    @property
    def failures(self) -> List[FuzzCase]:
        return [case for case in self.cases if not case.ok]

    def summary(self) -> str:
        agree = len(self.cases) - len(self.failures)
        return f"{agree}/{len(self.cases)} agree"

    def to_frame(self) -> pd.DataFrame:
        columns = list(FuzzCase.model_fields) + ["ok"]
        rows = [{**case.model_dump(), "ok": case.ok} for case in self.cases]
        return pd.DataFrame(rows, columns=columns)


def check_case(g: Graph, query: Sequence[int], solver: Solver) -> Tuple[Optional[bool], bool, bool, Optional[str]]:
    """
    Solve one instance and compare with the oracle.

    Returns:
        Tuple: (solver decision, oracle decision, certified, error message)
    """
    oracle_found = brute_force_tree(g, query) is not None
    try:
        result = solver(g, *query)
    except Exception as e:
        return None, oracle_found, False, f"{type(e).__name__}: {e}"
    if result.found:
        certified = not validate_tree(g, result.tree.vertices, query)
    else:
        target = attach_terminals(g, *query)[0] if result.gadgeted else g
        certified = not validate_certificate(target, result.certificate)
    return result.found, oracle_found, certified, None


def minimize_counterexample(
    g: Graph,
    query: Sequence[int],
    is_failing: Callable[[Graph, List[int]], bool],
) -> Tuple[Graph, List[int]]:
    """
    Greedily delete non-query vertices while the instance keeps failing.

    Vertices are tried from the highest id down; a full pass without a
    successful deletion ends the search.
    """
    current, current_query = g, list(query)
    changed = True
    while changed:
        changed = False
        protected = set(current_query)
        for v in reversed(range(current.n)):
            if v in protected:
                continue
            smaller, mapping = current.induced_subgraph(u for u in current.vertices() if u != v)
            smaller_query = [mapping[y] for y in current_query]
            if is_failing(smaller, smaller_query):
                current, current_query = smaller, smaller_query
                changed = True
                break
    return current, current_query


def _case_instance(index: int, min_n: int, max_n: int, p: float, seed: int) -> Tuple[int, Graph, List[int]]:
    case_seed = random.Random(seed * 1_000_003 + index).randrange(2 ** 31)
    n = min_n + case_seed % (max_n - min_n + 1)
    g = gen_connected_triangle_free(n, p, case_seed)
    return case_seed, g, list(gen_query(g, case_seed + 1))


def run_fuzz(
    count: int,
    min_n: int = 5,
    max_n: int = 12,
    p: float = 0.3,
    seed: int = 0,
    workers: int = 1,
    solver: Solver = four_in_a_tree,
    counterexample_path: Optional[str] = None,
) -> FuzzReport:
    """
    Compare the solver with the exhaustive oracle on random connected triangle-free graphs.

    Args:
        count: Number of cases
        min_n, max_n: Vertex count range, inclusive
        p: Edge probability before triangles are broken
        seed: Run seed; each case derives its own
        workers: Threads running cases concurrently
        solver: Solver under test
        counterexample_path: Where to write the smallest failing instance, if any

    Returns:
        FuzzReport: Cases in index order
    """
    if min_n < 1 or max_n < min_n:
        raise ValueError(f"Invalid vertex range {min_n}..{max_n}")

    def run(index: int) -> FuzzCase:
        case_seed, g, query = _case_instance(index, min_n, max_n, p, seed)
        found, oracle_found, certified, error = check_case(g, query, solver)
        case = FuzzCase(index=index, seed=case_seed, n=g.n, m=g.m, query=query, solver_found=found,
                        oracle_found=oracle_found, certified=certified, error=error)
        if not case.ok:
            logger.warning("fuzz case %d failed: solver=%s oracle=%s error=%s", index, found, oracle_found, error)
        return case

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            cases = list(pool.map(run, range(count)))
    else:
        cases = [run(index) for index in range(count)]
    report = FuzzReport(cases=cases)
    logger.info("fuzz: %s", report.summary())

    failures = report.failures
    if failures and counterexample_path:
        first = failures[0]
        _, g, query = _case_instance(first.index, min_n, max_n, p, seed)

        def is_failing(h: Graph, q: List[int]) -> bool:
            found, oracle_found, certified, error = check_case(h, q, solver)
            return error is not None or not certified or found != oracle_found

        small, small_query = minimize_counterexample(g, query, is_failing)
        write_graph_file(counterexample_path, GraphDocument(graph=small, terminals=small_query))
        report.counterexample_path = str(Path(counterexample_path))
        logger.info("counterexample with %d vertices written to %s", small.n, counterexample_path)
    return report
