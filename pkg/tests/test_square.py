import pytest
from hypothesis import given, settings, strategies as st

from fourtree.core.graph import build_graph
from fourtree.core.square import augment_square, path_to_terminal
from fourtree.core.structure import AugmentationError
from fourtree.core.validator import validate_cubic, validate_square, validate_tree
from fourtree.generators.structures import SquareSizes, gen_square_structure
from fourtree.models.certificate import SquareSplit
from fourtree.models.result import OutcomeKind
from fourtree.oracle.brute_force import brute_force_tree
from conftest import stable_neighbors, with_vertex


def test_vertex_without_a_neighbor_goes_to_r(small_square):
    g, _, split = small_square
    h = with_vertex(g, [0, 2])
    outcome = augment_square(h, split, split.domain(), 8)
    assert outcome.kind == OutcomeKind.GREW_SQUARE
    assert outcome.split.r_part == [8]
    assert outcome.trace.branch == "no-a-neighbor"
    assert outcome.domain == list(range(9))


def test_vertex_complete_to_s2_and_s4_joins_s1(small_square):
    g, _, split = small_square
    h = with_vertex(g, [4, 1, 3])
    outcome = augment_square(h, split, split.domain(), 8)
    assert outcome.kind == OutcomeKind.GREW_SQUARE
    assert outcome.split.s_parts[0] == [0, 8]
    assert outcome.trace.branch == "complete"
    assert outcome.trace.anchor == 4
    assert validate_square(h, outcome.split, set(outcome.domain)) == []


def test_vertex_seeing_only_its_terminal_joins_a1(small_square):
    g, _, split = small_square
    h = with_vertex(g, [4])
    outcome = augment_square(h, split, split.domain(), 8)
    assert outcome.kind == OutcomeKind.GREW_SQUARE
    assert outcome.split.a_parts[0] == [4, 8]
    assert outcome.trace.branch == "absorb"


def test_two_terminals_give_a_tree(small_square):
    g, terminals, split = small_square
    h = with_vertex(g, [4, 5])
    outcome = augment_square(h, split, split.domain(), 8)
    assert outcome.kind == OutcomeKind.FOUND_TREE
    assert outcome.tree.vertices == [0, 2, 3, 4, 5, 6, 7, 8]
    assert outcome.trace.branch == "square-a2-alone"
    assert validate_tree(h, outcome.tree.vertices, terminals.vertices) == []


def square_with_wide_middle():
    """S2 and S3 have two vertices each, so the terminals 7 and 8 have degree two."""
    edges = [
        (0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5), (5, 0),
        (6, 0), (7, 1), (7, 2), (8, 3), (8, 4), (9, 5),
    ]
    split = SquareSplit(A=[[6], [7], [8], [9]], S=[[0], [1, 2], [3, 4], [5]], R=[], terminals=[6, 7, 8, 9])
    return edges, split


def test_vertex_on_two_terminals_and_part_of_s2_gives_a_tree():
    edges, split = square_with_wide_middle()
    g = build_graph(11, edges + [(10, 2), (10, 6), (10, 8)])
    outcome = augment_square(g, split, split.domain(), 10)
    assert outcome.kind == OutcomeKind.FOUND_TREE
    assert outcome.trace.branch == "non-pendant-terminal"
    assert validate_tree(g, outcome.tree.vertices, [6, 7, 8, 9]) == []
    assert brute_force_tree(g, [6, 7, 8, 9]) is not None


def test_vertex_joining_opposite_terminals_has_no_outcome(small_square):
    g, terminals, split = small_square
    # x1 - v - x3 with v on S2: no tree, and v fits in no part of any split
    h = with_vertex(g, [4, 1, 6])
    assert brute_force_tree(h, terminals.vertices) is None
    with pytest.raises(AugmentationError):
        augment_square(h, split, split.domain(), 8)


def test_vertex_on_terminal_and_s3_gives_a_tree(small_square):
    g, terminals, split = small_square
    h = with_vertex(g, [4, 2])
    outcome = augment_square(h, split, split.domain(), 8)
    assert outcome.kind == OutcomeKind.FOUND_TREE
    assert outcome.trace.branch == "square-s3-neighbor"
    assert outcome.tree.vertices == [1, 2, 3, 4, 5, 6, 7, 8]


def test_square_turns_cubic(cubic_from_square):
    g, split = cubic_from_square
    outcome = augment_square(g, split, split.domain(), 10)
    assert outcome.kind == OutcomeKind.BECAME_CUBIC
    assert outcome.trace.branch == "became-cubic"
    cubic = outcome.split
    assert cubic.a_parts == [[4], [6], [7], [9]]
    assert cubic.b_parts == [[], [], [], []]
    assert cubic.s_parts == [[5], [1], [8], [3], [2], [], [0], [10]]
    assert cubic.r_part == []
    assert outcome.domain == list(range(11))
    assert validate_cubic(g, cubic, set(outcome.domain)) == []


def test_rejects_bad_input(small_square):
    g, _, split = small_square
    with pytest.raises(AugmentationError):
        augment_square(g, split, split.domain(), 3)
    triangle = with_vertex(g, [0, 1])
    with pytest.raises(AugmentationError):
        augment_square(triangle, split, split.domain(), 8)
    h = with_vertex(g, [4])
    with pytest.raises(AugmentationError):
        augment_square(h, split, split.domain() - {7}, 8)


def test_path_to_terminal(cubic_from_square):
    g, split = cubic_from_square
    assert path_to_terminal(g, split, 0, 0) == [0, 5, 4]
    assert path_to_terminal(g, split, 2, 8) == [8, 7]
    with pytest.raises(AugmentationError):
        path_to_terminal(g, split, 0, 1)


@settings(max_examples=60, deadline=None)
@given(
    a=st.lists(st.integers(1, 3), min_size=4, max_size=4),
    s=st.lists(st.integers(1, 2), min_size=4, max_size=4),
    r=st.integers(0, 2),
    seed=st.integers(0, 10_000),
)
def test_every_outcome_is_certified(a, s, r, seed):
    g, terminals, split = gen_square_structure(SquareSizes(a=a, s=s, r=r), 0.4, seed)
    h = with_vertex(g, stable_neighbors(g, list(g.vertices()), seed))
    v = g.n
    try:
        outcome = augment_square(h, split, split.domain(), v)
    except AugmentationError:
        assert any(h.degree(x) > 1 for x in terminals.vertices)
        assert brute_force_tree(h, terminals.vertices) is None
        return
    if outcome.kind == OutcomeKind.FOUND_TREE:
        assert validate_tree(h, outcome.tree.vertices, terminals.vertices) == []
    elif outcome.kind == OutcomeKind.BECAME_CUBIC:
        assert validate_cubic(h, outcome.split, set(outcome.domain)) == []
        assert v in outcome.domain
    else:
        assert outcome.domain == sorted(split.domain() | {v})
        assert validate_square(h, outcome.split, set(outcome.domain)) == []
