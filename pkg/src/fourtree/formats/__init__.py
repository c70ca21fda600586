from .graph_text import GraphFormatError, GraphDocument, parse_graph_text, format_graph_text, read_graph_file, write_graph_file
from .certificate_json import (
    CertificateError, certificate_to_json, certificate_from_json, result_to_json, load_certificate_payload,
    read_json, write_json
)
from .dot import PALETTE, coloring_from_certificate, to_dot

__all__ = [
    'GraphFormatError', 'GraphDocument', 'parse_graph_text', 'format_graph_text', 'read_graph_file', 'write_graph_file',
    'CertificateError', 'certificate_to_json', 'certificate_from_json', 'result_to_json', 'load_certificate_payload',
    'read_json', 'write_json',
    'PALETTE', 'coloring_from_certificate', 'to_dot'
]
