import pytest
from hypothesis import given, settings, strategies as st

from fourtree.core.cubic import augment_cubic
from fourtree.core.solver import four_in_a_tree
from fourtree.core.structure import AugmentationError
from fourtree.core.validator import validate_cubic, validate_tree
from fourtree.generators.structures import CubicSizes, gen_cubic_structure
from fourtree.models.result import OutcomeKind
from conftest import stable_neighbors, with_vertex


def test_isolated_vertex_goes_to_r(small_cubic):
    g, _, split = small_cubic
    h = with_vertex(g, [])
    outcome = augment_cubic(h, split, split.domain(), 12)
    assert outcome.kind == OutcomeKind.GREW_CUBIC
    assert outcome.split.r_part == [12]
    assert outcome.trace.branch == "between-to-r"


def test_vertex_on_one_upper_part_joins_b(small_cubic):
    g, _, split = small_cubic
    h = with_vertex(g, [0])
    outcome = augment_cubic(h, split, split.domain(), 12)
    assert outcome.split.b_parts == [[12], [], [], []]
    assert outcome.trace.branch == "between-absorb"


def test_vertex_complete_to_three_upper_parts(small_cubic):
    g, _, split = small_cubic
    h = with_vertex(g, [1, 2, 3])
    outcome = augment_cubic(h, split, split.domain(), 12)
    assert outcome.kind == OutcomeKind.GREW_CUBIC
    assert outcome.trace.branch == "opposite-absorb"
    # S8 in the frame that sends S1 to position 4 is the stored S5
    assert outcome.split.s_parts[4] == [4, 12]
    assert validate_cubic(h, outcome.split, set(outcome.domain)) == []


def test_terminal_and_s5_give_a_tree(small_cubic):
    g, terminals, split = small_cubic
    h = with_vertex(g, [8, 4])
    outcome = augment_cubic(h, split, split.domain(), 12)
    assert outcome.kind == OutcomeKind.FOUND_TREE
    assert outcome.trace.branch == "cubic-s5-only"
    assert outcome.tree.vertices == [1, 2, 3, 4, 8, 9, 10, 11, 12]
    assert validate_tree(h, outcome.tree.vertices, terminals.vertices) == []


def test_vertex_on_four_upper_parts_gives_a_tree(small_cubic):
    g, terminals, split = small_cubic
    h = with_vertex(g, [0, 1, 2, 3])
    outcome = augment_cubic(h, split, split.domain(), 12)
    assert outcome.kind == OutcomeKind.FOUND_TREE
    assert outcome.tree.vertices == [0, 1, 2, 3, 8, 9, 10, 11, 12]


def test_rejects_invalid_split(small_cubic):
    g, terminals, split = small_cubic
    h = with_vertex(g, [])
    with pytest.raises(AugmentationError):
        augment_cubic(h, split, split.domain() | {12}, 12)
    with pytest.raises(AugmentationError):
        augment_cubic(h, split, split.domain(), 0)


@settings(max_examples=60, deadline=None)
@given(
    a=st.lists(st.integers(1, 3), min_size=4, max_size=4),
    b=st.lists(st.integers(0, 2), min_size=4, max_size=4),
    lower=st.lists(st.integers(0, 2), min_size=4, max_size=4),
    r=st.integers(0, 2),
    seed=st.integers(0, 10_000),
)
def test_every_outcome_is_certified(a, b, lower, r, seed):
    if sum(1 for size in lower if size == 0) > 1:
        lower = [max(size, 1) for size in lower]
    sizes = CubicSizes(a=a, b=b, s=[1, 1, 1, 1] + lower, r=r)
    g, terminals, split = gen_cubic_structure(sizes, 0.4, seed)
    h = with_vertex(g, stable_neighbors(g, list(g.vertices()), seed))
    v = g.n
    try:
        outcome = augment_cubic(h, split, split.domain(), v)
    except AugmentationError:
        # only a terminal of degree above one may leave no cubic outcome
        assert any(h.degree(x) > 1 for x in terminals.vertices)
        assert not four_in_a_tree(h, *terminals.vertices).found
        return
    if outcome.kind == OutcomeKind.FOUND_TREE:
        assert validate_tree(h, outcome.tree.vertices, terminals.vertices) == []
    else:
        assert outcome.domain == sorted(split.domain() | {v})
        assert validate_cubic(h, outcome.split, set(outcome.domain)) == []
