from typing import Dict, Iterable, List, Optional, Union

from ..core.graph import Graph
from ..models.certificate import CubicSplit, DisconnectedCertificate, SquareSplit

PALETTE: Dict[str, str] = {
    "A": "#8ecae6",
    "B": "#cdb4db",
    "S": "#ffb703",
    "R": "#d9d9d9",
    "C": "#90be6d",
}
HIGHLIGHT = "#e63946"


def coloring_from_certificate(certificate: Union[SquareSplit, CubicSplit, DisconnectedCertificate]) -> Dict[int, str]:
    """Vertex -> part name such as 'A1', 'S6' or 'R'."""
    coloring: Dict[int, str] = {}
    if isinstance(certificate, DisconnectedCertificate):
        for u in certificate.component:
            coloring[u] = "C"
        return coloring
    groups: List[tuple] = [("A", certificate.a_parts), ("S", certificate.s_parts)]
    if isinstance(certificate, CubicSplit):
        groups.append(("B", certificate.b_parts))
    for name, parts in groups:
        for index, part in enumerate(parts, start=1):
            for u in part:
                coloring[u] = f"{name}{index}"
    for u in certificate.r_part:
        coloring[u] = "R"
    return coloring


def to_dot(
    g: Graph,
    coloring: Optional[Dict[int, str]] = None,
    labels: Optional[Dict[int, str]] = None,
    highlight: Optional[Iterable[int]] = None,
    name: str = "G",
) -> str:
    """
    Graphviz text for g; deterministic for equal inputs.

    Args:
        g: The graph
        coloring: Vertex -> part name; the first letter picks the fill colour
        labels: Vertex -> display name
        highlight: Vertices drawn with a red outline, with edges between them in red
        name: Graph name
    """
    coloring = coloring or {}
    labels = labels or {}
    marked = set(highlight or [])
    lines = [f"graph {name} {{", "  node [style=filled, fillcolor=\"#ffffff\"];"]
    for v in g.vertices():
        attrs = []
        text = labels.get(v, str(v))
        part = coloring.get(v)
        if part:
            text = f"{text}\\n{part}"
            attrs.append(f"fillcolor=\"{PALETTE.get(part[0], '#ffffff')}\"")
        attrs.insert(0, f"label=\"{text}\"")
        if v in marked:
            attrs.append(f"color=\"{HIGHLIGHT}\", penwidth=2")
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for u, v in g.edges():
        style = f" [color=\"{HIGHLIGHT}\", penwidth=2]" if u in marked and v in marked else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
