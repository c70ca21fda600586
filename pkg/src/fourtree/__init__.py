"""Four-in-a-tree on triangle-free graphs, with certificates when no tree exists."""
from .core import Graph, build_graph, four_in_a_tree, FourInATreeSolver, augment_square, augment_cubic
from .models import SolveResult, SquareSplit, CubicSplit, DisconnectedCertificate, InducedTree

__version__ = "0.1"

__all__ = [
    'Graph', 'build_graph', 'four_in_a_tree', 'FourInATreeSolver', 'augment_square', 'augment_cubic',
    'SolveResult', 'SquareSplit', 'CubicSplit', 'DisconnectedCertificate', 'InducedTree'
]
