import itertools

import pytest
from hypothesis import given, settings, strategies as st

from fourtree.core.graph import build_graph, is_centered_tree
from fourtree.generators.random_graphs import gen_triangle_free
from fourtree.oracle.brute_force import brute_force_centered_tree, brute_force_two_in_cycle
from fourtree.reduction.centered import (
    ReductionError, build_centered_instance, check_reduction, preserves_short_cycle_freeness
)
from conftest import atlas_graphs, cycle_graph, path_graph


def two_squares():
    """Two 4-cycles sharing vertex 0."""
    return build_graph(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)])


def test_c5_instance_layout():
    h, terminals = build_centered_instance(cycle_graph(5), 0, 2)
    assert h.n == 8
    assert terminals == [4, 5, 6, 7]
    # old 1, 3, 4 become 0, 1, 2 and the center is 3
    assert h.neighbors(3) == (0, 2, 4, 5)
    assert h.neighbors(6) == (0,)
    assert h.neighbors(7) == (1,)
    tree = brute_force_centered_tree(h, terminals)
    assert tree is not None
    assert is_centered_tree(h, tree.vertex_set())


def test_c5_agrees():
    assert check_reduction(cycle_graph(5), 0, 2)
    assert preserves_short_cycle_freeness(cycle_graph(5), 0, 2, 4)


def test_two_squares_have_no_cycle_through_both_sides():
    g = two_squares()
    assert brute_force_two_in_cycle(g, 1, 5) is None
    h, terminals = build_centered_instance(g, 1, 5)
    assert brute_force_centered_tree(h, terminals) is None
    assert check_reduction(g, 1, 5)


def test_rejected_pairs():
    with pytest.raises(ReductionError):
        build_centered_instance(cycle_graph(5), 0, 1)
    with pytest.raises(ReductionError):
        build_centered_instance(cycle_graph(5), 2, 2)
    with pytest.raises(ReductionError):
        build_centered_instance(path_graph(4), 0, 2)
    with pytest.raises(ReductionError):
        build_centered_instance(cycle_graph(5), 0, 9)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(5, 10), p=st.floats(0.2, 0.6), seed=st.integers(0, 10_000))
def test_reduction_on_random_graphs(n, p, seed):
    g = gen_triangle_free(n, p, seed)
    pairs = [
        (x, y) for x in g.vertices() for y in g.vertices()
        if x < y and g.degree(x) == 2 and g.degree(y) == 2 and not g.has_edge(x, y)
    ]
    for x, y in pairs[:3]:
        assert check_reduction(g, x, y)
        assert preserves_short_cycle_freeness(g, x, y, 3)


def test_reduction_on_every_small_graph():
    checked = 0
    for g in atlas_graphs(7):
        for x, y in itertools.combinations(g.vertices(), 2):
            if g.degree(x) == 2 and g.degree(y) == 2 and not g.has_edge(x, y):
                assert check_reduction(g, x, y), (list(g.edges()), x, y)
                checked += 1
    assert checked > 100
