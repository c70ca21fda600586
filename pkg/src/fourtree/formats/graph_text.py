from pydantic import BaseModel, ConfigDict, Field
from pathlib import Path
from typing import Dict, List, Optional, Union

from ..core.graph import Graph, GraphError, build_graph


class GraphFormatError(Exception):
    """Custom exception for malformed graph text"""
    pass


class GraphDocument(BaseModel):
    """A graph together with the optional display labels and terminals carried by its file"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    graph: Graph = Field(..., description="The parsed graph")
    labels: Dict[int, str] = Field(default_factory=dict, description="Vertex -> display name from '# label' lines")
    terminals: Optional[List[int]] = Field(None, description="Vertices from a '# terminals' line")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphDocument):
            return NotImplemented
        return (self.graph, self.labels, self.terminals) == (other.graph, other.labels, other.terminals)


def _int(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"line {line_no}: expected an integer, got {token!r}")


def parse_graph_text(text: str) -> GraphDocument:
    """
    Parse `n m` followed by m lines `u v`.

    Comment lines start with '#'. `# label v name` and `# terminals a b ...`
    are recognised anywhere; other comments are ignored.

    Raises:
        GraphFormatError: On malformed counts, tokens or edges
    """
    header = None
    edges = []
    labels: Dict[int, str] = {}
    terminals: Optional[List[int]] = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            words = line[1:].split(None, 2)
            if words[:1] == ["label"]:
                if len(words) < 3:
                    raise GraphFormatError(f"line {line_no}: label lines read '# label v name'")
                labels[_int(words[1], line_no)] = words[2]
            elif words[:1] == ["terminals"]:
                terminals = [_int(t, line_no) for t in line[1:].split()[1:]]
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"line {line_no}: expected two integers, got {len(tokens)} tokens")
        u, v = _int(tokens[0], line_no), _int(tokens[1], line_no)
        if header is None:
            header = (u, v)
        else:
            edges.append((u, v))

    if header is None:
        raise GraphFormatError("missing 'n m' header line")
    n, m = header
    if n < 0 or m < 0:
        raise GraphFormatError(f"negative counts in header: {n} {m}")
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
    try:
        graph = build_graph(n, edges)
    except GraphError as e:
        raise GraphFormatError(str(e))
    for v in list(labels) + list(terminals or []):
        if not 0 <= v < n:
            raise GraphFormatError(f"comment refers to vertex {v} outside 0..{n - 1}")
    return GraphDocument(graph=graph, labels=labels, terminals=terminals)


def format_graph_text(doc: Union[GraphDocument, Graph]) -> str:
    """Canonical text: header, label lines by id, terminals line, edges sorted."""
    if isinstance(doc, Graph):
        doc = GraphDocument(graph=doc)
    g = doc.graph
    lines = [f"{g.n} {g.m}"]
    for v in sorted(doc.labels):
        lines.append(f"# label {v} {doc.labels[v]}")
    if doc.terminals is not None:
        lines.append("# terminals " + " ".join(str(t) for t in doc.terminals))
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph_file(path: Union[str, Path]) -> GraphDocument:
    """
    Raises:
        GraphFormatError: If the file cannot be read or parsed
    """
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise GraphFormatError(f"cannot read {path}: {e}")
    return parse_graph_text(text)


def write_graph_file(path: Union[str, Path], doc: Union[GraphDocument, Graph]) -> None:
    Path(path).write_text(format_graph_text(doc))
