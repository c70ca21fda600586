from typing import Dict, Iterable, List, Optional
from pathlib import Path
import logging

import networkx as nx
import plotly.graph_objects as go

from ..core.graph import Graph, to_networkx
from ..formats.dot import HIGHLIGHT, PALETTE

logger = logging.getLogger(__name__)


def build_figure(
    g: Graph,
    coloring: Optional[Dict[int, str]] = None,
    labels: Optional[Dict[int, str]] = None,
    title: str = "",
    highlight: Optional[Iterable[int]] = None,
    seed: int = 0,
) -> go.Figure:
    """
    Render g with a seeded spring layout, one trace per part.

    Args:
        g: The graph
        coloring: Vertex -> part name, as produced by coloring_from_certificate
        labels: Vertex -> display name
        title: Figure title
        highlight: Vertices of a tree to outline
        seed: Layout seed

    Returns:
        go.Figure: Plotly figure
    """
    coloring = coloring or {}
    labels = labels or {}
    marked = set(highlight or [])
    position = nx.spring_layout(to_networkx(g), seed=seed)

    edge_x: List[Optional[float]] = []
    edge_y: List[Optional[float]] = []
    for u, v in g.edges():
        edge_x += [position[u][0], position[v][0], None]
        edge_y += [position[u][1], position[v][1], None]
    fig = go.Figure()
    fig.add_trace(go.Scatter(x=edge_x, y=edge_y, mode="lines", line=dict(width=1, color="#888888"),
                             hoverinfo="skip", showlegend=False))

    groups: Dict[str, List[int]] = {}
    for v in g.vertices():
        groups.setdefault(coloring.get(v, "-"), []).append(v)
    for part in sorted(groups):
        members = groups[part]
        fig.add_trace(go.Scatter(
            x=[position[v][0] for v in members],
            y=[position[v][1] for v in members],
            mode="markers+text",
            name=part,
            text=[labels.get(v, str(v)) for v in members],
            textposition="top center",
            marker=dict(
                size=14,
                color=PALETTE.get(part[0], "#ffffff"),
                line=dict(width=[3 if v in marked else 1 for v in members],
                          color=[HIGHLIGHT if v in marked else "#333333" for v in members]),
            ),
        ))

    fig.update_layout(
        title=title,
        showlegend=True,
        xaxis=dict(visible=False),
        yaxis=dict(visible=False),
        plot_bgcolor="white",
    )
    return fig


def write_html(fig: go.Figure, path) -> None:
    Path(path).write_text(fig.to_html(include_plotlyjs="cdn"))
    logger.info("figure written to %s", path)
