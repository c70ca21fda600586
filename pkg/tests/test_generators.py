import networkx as nx
import pytest
from hypothesis import assume, given, settings, strategies as st
from pydantic import ValidationError

from fourtree.core.graph import connected_components, find_triangle, to_networkx
from fourtree.core.solver import attach_terminals
from fourtree.core.validator import validate_cubic, validate_square
from fourtree.generators.random_graphs import (
    GeneratorError, gen_bipartite, gen_connected_triangle_free, gen_query, gen_triangle_free
)
from fourtree.generators.structures import CubicSizes, SquareSizes, gen_cubic_structure, gen_square_structure
from fourtree.oracle.brute_force import brute_force_tree
from conftest import cycle_graph


@settings(max_examples=50, deadline=None)
@given(n=st.integers(0, 30), p=st.floats(0.0, 1.0), seed=st.integers(0, 100_000))
def test_random_graphs_are_triangle_free(n, p, seed):
    g = gen_triangle_free(n, p, seed)
    assert g.n == n
    assert sum(nx.triangles(to_networkx(g)).values()) == 0


@settings(max_examples=30, deadline=None)
@given(n=st.integers(1, 25), p=st.floats(0.0, 0.5), seed=st.integers(0, 100_000))
def test_connected_variant(n, p, seed):
    g = gen_connected_triangle_free(n, p, seed)
    assert len(connected_components(g)) == 1
    assert find_triangle(g) is None


def test_generators_are_deterministic():
    assert gen_triangle_free(15, 0.4, 3) == gen_triangle_free(15, 0.4, 3)
    assert gen_query(cycle_graph(6), 1) == gen_query(cycle_graph(6), 1)


def test_bipartite():
    g = gen_bipartite(10, 12, seed=2)
    assert g.m == 12
    assert all((u + v) % 2 == 1 for u, v in g.edges())
    with pytest.raises(GeneratorError):
        gen_bipartite(4, 5, seed=0)


def test_bad_parameters():
    with pytest.raises(GeneratorError):
        gen_triangle_free(-1, 0.5, 0)
    with pytest.raises(GeneratorError):
        gen_triangle_free(5, 1.5, 0)
    with pytest.raises(ValidationError):
        SquareSizes(a=[1, 1, 1])
    with pytest.raises(ValidationError):
        CubicSizes(s=[1, 1, 1, 1, 0, 0, 1, 1])


def test_smallest_square_is_c4_with_pendants(small_square, c4):
    g, terminals, split = small_square
    h, attached = attach_terminals(c4, 0, 1, 2, 3)
    assert g == h
    assert terminals.vertices == attached.vertices
    assert split.s_parts == [[0], [1], [2], [3]]


def test_smallest_cubic(small_cubic):
    g, terminals, split = small_cubic
    assert g.n == 12
    assert terminals.vertices == [8, 9, 10, 11]
    assert split.s_parts == [[k] for k in range(8)]


@settings(max_examples=40, deadline=None)
@given(
    a=st.lists(st.integers(1, 3), min_size=4, max_size=4),
    s=st.lists(st.integers(1, 3), min_size=4, max_size=4),
    r=st.integers(0, 3),
    inner_p=st.floats(0.0, 1.0),
    seed=st.integers(0, 10_000),
)
def test_square_structures_are_valid(a, s, r, inner_p, seed):
    g, terminals, split = gen_square_structure(SquareSizes(a=a, s=s, r=r), inner_p, seed)
    assert find_triangle(g) is None
    assert validate_square(g, split) == []
    assert split.terminals == terminals.vertices


@settings(max_examples=40, deadline=None)
@given(
    a=st.lists(st.integers(1, 2), min_size=4, max_size=4),
    b=st.lists(st.integers(0, 2), min_size=4, max_size=4),
    lower=st.lists(st.integers(1, 2), min_size=4, max_size=4),
    r=st.integers(0, 3),
    seed=st.integers(0, 10_000),
)
def test_cubic_structures_are_valid(a, b, lower, r, seed):
    g, _, split = gen_cubic_structure(CubicSizes(a=a, b=b, s=[1, 1, 1, 1] + lower, r=r), 0.5, seed)
    assert find_triangle(g) is None
    assert validate_cubic(g, split) == []


@settings(max_examples=15, deadline=None)
@given(seed=st.integers(0, 10_000), r=st.integers(0, 2))
def test_structures_have_no_covering_tree(seed, r):
    g, terminals, _ = gen_square_structure(SquareSizes(a=[1, 2, 1, 2], s=[1, 1, 2, 1], r=r), 0.5, seed)
    assert brute_force_tree(g, terminals.vertices) is None


@settings(max_examples=20, deadline=None)
@given(
    a=st.lists(st.integers(1, 2), min_size=4, max_size=4),
    b=st.lists(st.integers(0, 1), min_size=4, max_size=4),
    lower=st.lists(st.integers(1, 2), min_size=4, max_size=4),
    empty=st.integers(-1, 3),
    r=st.integers(0, 1),
    seed=st.integers(0, 10_000),
)
def test_cubic_structures_have_no_covering_tree(a, b, lower, empty, r, seed):
    if empty >= 0:
        lower[empty] = 0
    sizes = CubicSizes(a=a, b=b, s=[1, 1, 1, 1] + lower, r=r)
    assume(sum(a) + sum(b) + sum(sizes.s) + r <= 22)
    g, terminals, split = gen_cubic_structure(sizes, 0.5, seed)
    assert g.n <= 22
    assert validate_cubic(g, split) == []
    assert brute_force_tree(g, terminals.vertices) is None
