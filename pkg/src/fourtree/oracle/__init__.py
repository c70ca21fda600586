from .brute_force import (
    OracleError, iter_connected_sets, brute_force_tree, brute_force_centered_tree, brute_force_two_in_cycle
)

__all__ = ['OracleError', 'iter_connected_sets', 'brute_force_tree', 'brute_force_centered_tree', 'brute_force_two_in_cycle']
