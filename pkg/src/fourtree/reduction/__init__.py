from .centered import ReductionError, build_centered_instance, check_reduction, preserves_short_cycle_freeness

__all__ = ['ReductionError', 'build_centered_instance', 'check_reduction', 'preserves_short_cycle_freeness']
