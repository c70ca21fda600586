from .figure import build_figure, to_networkx, write_html

__all__ = ['build_figure', 'to_networkx', 'write_html']
