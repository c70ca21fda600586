from .fuzz import FuzzCase, FuzzReport, check_case, minimize_counterexample, run_fuzz
from .bench import BenchRow, BenchReport, fit_exponent, run_bench

__all__ = [
    'FuzzCase', 'FuzzReport', 'check_case', 'minimize_counterexample', 'run_fuzz',
    'BenchRow', 'BenchReport', 'fit_exponent', 'run_bench'
]
