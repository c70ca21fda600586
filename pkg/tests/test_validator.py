import pytest

from fourtree.core.graph import build_graph
from fourtree.core.validator import (
    validate_certificate, validate_cubic, validate_disconnected, validate_square, validate_tree
)
from fourtree.models.certificate import CubicSplit, DisconnectedCertificate, SquareSplit
from fourtree.oracle.brute_force import brute_force_tree
from conftest import path_graph


def items(violations):
    return {violation.item for violation in violations}


def test_generated_splits_are_valid(small_square, small_cubic):
    g, _, split = small_square
    assert validate_square(g, split) == []
    assert validate_certificate(g, split) == []
    g, _, split = small_cubic
    assert validate_cubic(g, split) == []


def test_moving_s1_to_r_breaks_the_square(small_square):
    g, terminals, split = small_square
    tampered = SquareSplit(A=split.a_parts, S=[[], [1], [2], [3]], R=[0], terminals=terminals.vertices)
    found = items(validate_square(g, tampered))
    assert {5, 8, 9} <= found


def test_partition_errors(small_square):
    g, terminals, split = small_square
    doubled = SquareSplit(A=[[4], [5], [6], [7]], S=[[0], [1], [2], [3]], R=[0], terminals=terminals.vertices)
    assert 2 in items(validate_square(g, doubled))
    assert 1 in items(validate_square(g, split, domain=set(range(9))))


def test_unknown_vertex_stops_early(small_square):
    g, terminals, _ = small_square
    bad = SquareSplit(A=[[4], [5], [6], [7, 40]], S=[[0], [1], [2], [3]], R=[], terminals=terminals.vertices)
    violations = validate_square(g, bad)
    assert items(violations) == {1}


def test_cubic_violations(small_cubic):
    g, terminals, split = small_cubic
    # S5 and S6 both emptied into R
    s_parts = [list(p) for p in split.s_parts]
    r_part = s_parts[4] + s_parts[5]
    s_parts[4], s_parts[5] = [], []
    broken = CubicSplit(A=split.a_parts, B=split.b_parts, S=s_parts, R=r_part, terminals=terminals.vertices)
    found = items(validate_cubic(g, broken))
    assert {6, 13} <= found


def test_cubic_terminal_outside_a(small_cubic):
    g, _, split = small_cubic
    moved = CubicSplit(A=split.a_parts, B=split.b_parts, S=split.s_parts, R=split.r_part, terminals=[8, 9, 10, 0])
    assert 3 in items(validate_cubic(g, moved))


def test_terminals_of_higher_degree_are_accepted():
    # S2 and S3 have two vertices each, so x2 and x3 have degree two
    g = build_graph(10, [
        (0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5), (5, 0),
        (6, 0), (7, 1), (7, 2), (8, 3), (8, 4), (9, 5),
    ])
    split = SquareSplit(A=[[6], [7], [8], [9]], S=[[0], [1, 2], [3, 4], [5]], R=[], terminals=[6, 7, 8, 9])
    assert g.degree(7) == 2 and g.degree(8) == 2
    assert validate_square(g, split) == []
    assert brute_force_tree(g, [6, 7, 8, 9]) is None


def test_validate_tree():
    g = path_graph(4)
    assert validate_tree(g, [0, 1, 2, 3], [0, 3]) == []
    assert items(validate_tree(g, [0, 1, 3], [0, 3])) == {1}
    assert items(validate_tree(g, [0, 1], [0, 3])) == {2}
    assert items(validate_tree(g, [0, 9], [0])) == {1}


def test_validate_disconnected():
    g = build_graph(4, [(0, 1), (2, 3)])
    good = DisconnectedCertificate(component=[0, 1], terminals=[0, 1, 2, 3], separated=[2, 3])
    assert validate_disconnected(g, good) == []
    assert validate_certificate(g, good) == []
    not_closed = DisconnectedCertificate(component=[0], terminals=[0, 2], separated=[2])
    assert 2 in items(validate_disconnected(g, not_closed))
    wrong_side = DisconnectedCertificate(component=[0, 1], terminals=[0, 1], separated=[])
    assert 4 in items(validate_disconnected(g, wrong_side))


def test_model_rejects_wrong_arity():
    with pytest.raises(ValueError):
        SquareSplit(A=[[0]], S=[[1], [2], [3], [4]], R=[], terminals=[0, 1, 2, 3])
    with pytest.raises(ValueError):
        SquareSplit(A=[[0], [1], [2], [3]], S=[[4], [5], [6], [7]], R=[], terminals=[0, 0, 2, 3])
