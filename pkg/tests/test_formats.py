import json

import pytest

from fourtree.core.solver import four_in_a_tree
from fourtree.formats.certificate_json import (
    CertificateError, certificate_from_json, certificate_to_json, load_certificate_payload, read_json, result_to_json,
    write_json
)
from fourtree.formats.dot import coloring_from_certificate, to_dot
from fourtree.formats.graph_text import (
    GraphDocument, GraphFormatError, format_graph_text, parse_graph_text, read_graph_file, write_graph_file
)
from fourtree.models.certificate import SquareSplit
from fourtree.visualization.figure import build_figure, write_html
from conftest import path_graph

C4_TEXT = """\
# a square
4 4
# label 0 north
# terminals 0 1 2 3
0 1
1 2
2 3
3 0
"""


def test_parse_graph_text():
    doc = parse_graph_text(C4_TEXT)
    assert doc.graph.n == 4 and doc.graph.m == 4
    assert doc.labels == {0: "north"}
    assert doc.terminals == [0, 1, 2, 3]


def test_format_is_canonical():
    doc = parse_graph_text(C4_TEXT)
    text = format_graph_text(doc)
    assert text.splitlines()[:3] == ["4 4", "# label 0 north", "# terminals 0 1 2 3"]
    assert parse_graph_text(text) == doc
    assert format_graph_text(path_graph(3)) == "3 2\n0 1\n1 2\n"


@pytest.mark.parametrize("text", [
    "",
    "3 2\n0 1\n",
    "3 1\n0 x\n",
    "3 1\n0 1 2\n",
    "3 1\n0 0\n",
    "3 1\n0 1\n# label 7 far\n",
    "3 1\n# label 1\n0 1\n",
])
def test_malformed_graph_text(text):
    with pytest.raises(GraphFormatError):
        parse_graph_text(text)


def test_graph_files(tmp_path):
    path = tmp_path / "g.txt"
    doc = GraphDocument(graph=path_graph(4), terminals=[0, 3])
    write_graph_file(path, doc)
    assert read_graph_file(path) == doc
    with pytest.raises(GraphFormatError):
        read_graph_file(tmp_path / "missing.txt")


def test_certificate_json(small_square):
    g, _, split = small_square
    data = certificate_to_json(split)
    assert data["kind"] == "square"
    assert data["A"] == [[4], [5], [6], [7]]
    assert data["S"] == [[0], [1], [2], [3]]
    assert data["R"] == []
    assert certificate_from_json(data, g) == split


def test_certificate_json_errors(small_square):
    g, _, split = small_square
    data = certificate_to_json(split)
    with pytest.raises(CertificateError):
        certificate_from_json({**data, "R": [99]}, g)
    with pytest.raises(CertificateError):
        certificate_from_json({**data, "kind": "pentagon"})
    with pytest.raises(CertificateError):
        certificate_from_json({**data, "S": [[0], [1]]})


def test_gadgeted_result_payload(c4):
    result = four_in_a_tree(c4, 0, 1, 2, 3)
    payload = json.loads(json.dumps(result_to_json(result)))
    target, certificate = load_certificate_payload(payload, c4)
    assert target.n == 8
    assert isinstance(certificate, SquareSplit)
    with pytest.raises(CertificateError):
        load_certificate_payload({"answer": "tree", "vertices": [0]}, c4)


def test_json_files(tmp_path):
    path = tmp_path / "c.json"
    write_json(path, {"b": 1, "a": [2]})
    assert read_json(path) == {"a": [2], "b": 1}
    (tmp_path / "list.json").write_text("[1, 2]")
    with pytest.raises(CertificateError):
        read_json(tmp_path / "list.json")


def test_dot_export(small_square):
    g, _, split = small_square
    coloring = coloring_from_certificate(split)
    assert coloring[4] == "A1" and coloring[3] == "S4"
    text = to_dot(g, coloring, {0: "s"}, highlight=[0, 1])
    assert text.startswith("graph G {")
    assert '0 [label="s\\nS1", fillcolor="#ffb703", color="#e63946", penwidth=2];' in text
    assert '0 -- 1 [color="#e63946", penwidth=2];' in text
    assert "2 -- 3;" in text
    assert to_dot(g, coloring) == to_dot(g, coloring)


def test_html_figure(tmp_path, small_square):
    g, _, split = small_square
    fig = build_figure(g, coloring_from_certificate(split), title="square", highlight=[0])
    # one edge trace plus one trace per part
    assert len(fig.data) == 1 + 8
    path = tmp_path / "square.html"
    write_html(fig, path)
    assert "plotly" in path.read_text().lower()
