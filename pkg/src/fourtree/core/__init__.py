from .graph import (
    Graph, GraphError, build_graph, find_triangle, is_induced_tree, is_centered_tree, is_induced_path,
    bfs_path, bfs_until, is_complete_to, is_anticomplete_to, neighborhood, connected_components, girth,
    to_networkx
)
from .three_in_tree import ThreeInTreeError, tree_covering_three, minimalize_tree, decompose_claw
from .structure import AugmentationError
from .validator import validate_square, validate_cubic, validate_tree, validate_disconnected, validate_certificate
from .square import augment_square, path_to_terminal
from .cubic import augment_cubic
from .solver import (
    SolverError, TriangleError, FourInATreeSolver, attach_terminals, strip_terminals, initial_phase, four_in_a_tree,
    solve_within
)

__all__ = [
    'Graph', 'GraphError', 'build_graph', 'find_triangle', 'is_induced_tree', 'is_centered_tree', 'is_induced_path',
    'bfs_path', 'bfs_until', 'is_complete_to', 'is_anticomplete_to', 'neighborhood', 'connected_components', 'girth',
    'to_networkx',
    'ThreeInTreeError', 'tree_covering_three', 'minimalize_tree', 'decompose_claw',
    'AugmentationError',
    'validate_square', 'validate_cubic', 'validate_tree', 'validate_disconnected', 'validate_certificate',
    'augment_square', 'path_to_terminal', 'augment_cubic',
    'SolverError', 'TriangleError', 'FourInATreeSolver', 'attach_terminals', 'strip_terminals', 'initial_phase',
    'four_in_a_tree', 'solve_within'
]
