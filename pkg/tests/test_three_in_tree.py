import pytest
from hypothesis import given, settings, strategies as st

from fourtree.core.graph import build_graph, is_induced_tree
from fourtree.core.three_in_tree import ThreeInTreeError, decompose_claw, minimalize_tree, tree_covering_three
from fourtree.generators.random_graphs import gen_connected_triangle_free
from fourtree.models.result import InducedTree
from conftest import cycle_graph, path_graph


def test_three_on_a_path():
    tree = tree_covering_three(path_graph(5), 0, 4, 2)
    assert tree.vertices == [0, 1, 2, 3, 4]
    assert tree.required == [0, 4, 2]


def test_three_on_a_cycle():
    tree = tree_covering_three(cycle_graph(6), 0, 2, 4)
    assert len(tree) == 5
    assert is_induced_tree(cycle_graph(6), tree.vertex_set())


def test_repeated_vertices():
    tree = tree_covering_three(path_graph(3), 1, 1, 1)
    assert tree.vertices == [1]


def test_disconnected_and_triangle():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(ThreeInTreeError):
        tree_covering_three(g, 0, 1, 2)
    k3 = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(ThreeInTreeError):
        tree_covering_three(k3, 0, 1, 2)


def test_within_is_respected(c4):
    with pytest.raises(ThreeInTreeError):
        tree_covering_three(c4, 0, 2, 1, within={0, 2, 1, 3} - {1})
    tree = tree_covering_three(c4, 0, 2, 3, within={0, 2, 3})
    assert tree.vertices == [0, 2, 3]


def test_minimalize_drops_spare_leaves():
    g = path_graph(6)
    tree = minimalize_tree(g, InducedTree(vertices=[0, 1, 2, 3, 4, 5], required=[1, 3]))
    assert tree.vertices == [1, 2, 3]


def test_decompose_claw():
    # center 0, legs to 2, 4 and 5
    g = build_graph(6, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)])
    claw = decompose_claw(g, InducedTree(vertices=list(range(6))), 2, 4, 5)
    assert claw.center == 0
    assert claw.legs == [[0, 1, 2], [0, 3, 4], [0, 5]]
    with pytest.raises(ThreeInTreeError):
        decompose_claw(path_graph(3), InducedTree(vertices=[0, 1, 2]), 0, 1, 2)


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(3, 16),
    p=st.floats(0.1, 0.6),
    seed=st.integers(0, 10_000),
    picks=st.tuples(st.integers(0, 15), st.integers(0, 15), st.integers(0, 15)),
)
def test_tree_is_induced_and_minimal(n, p, seed, picks):
    g = gen_connected_triangle_free(n, p, seed)
    a, b, c = (x % n for x in picks)
    tree = tree_covering_three(g, a, b, c)
    members = tree.vertex_set()
    assert {a, b, c} <= members
    assert is_induced_tree(g, members)
    # every leaf of a minimal covering tree is required
    for u in members:
        if len(members) > 1 and sum(1 for w in g.neighbors(u) if w in members) == 1:
            assert u in {a, b, c}
