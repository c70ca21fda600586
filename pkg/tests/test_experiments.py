import pytest

from fourtree.core.graph import build_graph
from fourtree.core.solver import four_in_a_tree
from fourtree.experiments.bench import BenchRow, fit_exponent, run_bench
from fourtree.experiments.fuzz import check_case, minimize_counterexample, run_fuzz
from fourtree.formats.graph_text import read_graph_file
from fourtree.generators.random_graphs import GeneratorError
from conftest import cycle_graph


def broken_solver(g, *query):
    raise RuntimeError("injected")


def test_empty_fuzz_run():
    report = run_fuzz(count=0)
    assert report.cases == []
    assert report.summary() == "0/0 agree"
    assert report.to_frame().empty


def test_fuzz_agrees_with_oracle():
    report = run_fuzz(count=25, min_n=5, max_n=9, seed=7)
    assert report.failures == []
    assert report.summary() == "25/25 agree"
    frame = report.to_frame()
    assert len(frame) == 25
    assert frame["ok"].all()


def test_fuzz_is_reproducible():
    first = run_fuzz(count=5, seed=3)
    second = run_fuzz(count=5, seed=3, workers=2)
    assert [case.model_dump() for case in first.cases] == [case.model_dump() for case in second.cases]


def test_injected_failure_is_minimized(tmp_path):
    out = tmp_path / "counterexample.txt"
    report = run_fuzz(count=3, min_n=6, max_n=8, seed=1, solver=broken_solver, counterexample_path=str(out))
    assert len(report.failures) == 3
    assert report.failures[0].error == "RuntimeError: injected"
    assert report.counterexample_path == str(out)
    doc = read_graph_file(out)
    # only the query vertices survive when every instance fails
    assert doc.graph.n == len(set(doc.terminals))


def test_check_case_reports_certification():
    found, oracle_found, certified, error = check_case(cycle_graph(4), [0, 1, 2, 3], four_in_a_tree)
    assert (found, oracle_found, certified, error) == (False, False, True, None)


def test_minimize_keeps_query():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    small, query = minimize_counterexample(g, [0, 4], lambda h, q: True)
    assert small.n == 2
    assert query == [0, 1]


def test_bench_without_sizes():
    report = run_bench([])
    assert report.rows == []
    assert report.exponent is None


def test_bench_single_size_has_no_exponent():
    report = run_bench([8], seed=1, edge_factor=1.5)
    assert len(report.rows) == 1
    assert report.rows[0].n == 8
    assert report.rows[0].m == 12
    assert report.exponent is None


def test_fit_exponent_recovers_a_power_law():
    rows = [BenchRow(n=n, m=n, seconds=1e-6 * (n * n) ** 2, answer="tree", steps=0) for n in (10, 20, 40, 80)]
    assert abs(fit_exponent(rows) - 2.0) < 1e-6


def test_structure_families_have_no_tree():
    for family in ("square", "cubic"):
        report = run_bench([40, 80], seed=3, family=family)
        assert [row.family for row in report.rows] == [family, family]
        assert all(row.answer == "no-tree" for row in report.rows)
        # the first split covers only a few vertices, so the loop has to run
        assert all(row.steps > 0 for row in report.rows)
        assert report.exponent is not None


def test_structure_density_follows_the_edge_factor():
    sparse = run_bench([200], seed=4, edge_factor=1.0, family="square").rows[0]
    dense = run_bench([200], seed=4, edge_factor=4.0, family="square").rows[0]
    assert sparse.m < dense.m


def test_bench_rejects_unknown_or_tiny_instances():
    with pytest.raises(GeneratorError):
        run_bench([40], family="grid")
    with pytest.raises(GeneratorError):
        run_bench([6], family="square")
    with pytest.raises(GeneratorError):
        run_bench([11], family="cubic")
