from .random_graphs import GeneratorError, gen_triangle_free, gen_connected_triangle_free, gen_bipartite, gen_query
from .structures import SquareSizes, CubicSizes, gen_square_structure, gen_cubic_structure

__all__ = [
    'GeneratorError', 'gen_triangle_free', 'gen_connected_triangle_free', 'gen_bipartite', 'gen_query',
    'SquareSizes', 'CubicSizes', 'gen_square_structure', 'gen_cubic_structure'
]
