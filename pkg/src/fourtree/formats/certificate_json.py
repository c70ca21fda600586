from pydantic import TypeAdapter, ValidationError
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union
import json

from ..core.graph import Graph
from ..core.solver import attach_terminals
from ..models.certificate import Certificate, CubicSplit, DisconnectedCertificate, SquareSplit
from ..models.result import SolveResult

CertificateModel = Union[SquareSplit, CubicSplit, DisconnectedCertificate]

_adapter = TypeAdapter(Certificate)


class CertificateError(Exception):
    """Custom exception for certificate JSON that does not match the schema or the graph"""
    pass


def certificate_to_json(certificate: CertificateModel) -> Dict[str, Any]:
    """Wire form: `kind` plus the parts under keys A, B, S, R."""
    return certificate.model_dump(by_alias=True, mode="json")


def certificate_from_json(data: Dict[str, Any], g: Optional[Graph] = None) -> CertificateModel:
    """
    Parse a certificate and check that it only names vertices of g.

    Raises:
        CertificateError: On a schema mismatch or an unknown vertex
    """
    try:
        certificate = _adapter.validate_python(data)
    except ValidationError as e:
        raise CertificateError(f"certificate does not match the schema: {e.errors()[0]['msg']}")
    if g is not None:
        if isinstance(certificate, DisconnectedCertificate):
            named = [*certificate.component, *certificate.terminals]
        else:
            named = [u for part in certificate.parts() for u in part] + list(certificate.terminals)
        unknown = sorted({u for u in named if not 0 <= u < g.n})
        if unknown:
            raise CertificateError(f"certificate names vertices outside the graph: {unknown[:10]}")
    return certificate


def result_to_json(result: SolveResult) -> Dict[str, Any]:
    return result.to_json_dict()


def load_certificate_payload(data: Dict[str, Any], g: Graph) -> Tuple[Graph, CertificateModel]:
    """
    Accept a bare certificate or a no-tree solve result.

    A result marked gadgeted is checked on g with pendant terminals attached
    to its query vertices.

    Returns:
        Tuple[Graph, CertificateModel]: The graph to check against and the certificate

    Raises:
        CertificateError: If the payload is neither form
    """
    if "answer" not in data:
        return g, certificate_from_json(data, g)
    if data["answer"] != "no-tree" or "certificate" not in data:
        raise CertificateError(f"result with answer {data['answer']!r} carries no certificate")
    target = g
    if data.get("gadgeted"):
        query: List[int] = data.get("query") or []
        if len(query) != 4 or any(not 0 <= y < g.n for y in query):
            raise CertificateError(f"gadgeted result needs four query vertices of the graph, got {query}")
        target, _ = attach_terminals(g, *query)
    return target, certificate_from_json(data["certificate"], target)


def read_json(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Raises:
        CertificateError: If the file is unreadable or not a JSON object
    """
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise CertificateError(f"cannot read JSON from {path}: {e}")
    if not isinstance(data, dict):
        raise CertificateError(f"{path} does not hold a JSON object")
    return data


def write_json(path: Union[str, Path], data: Dict[str, Any]) -> None:
    Path(path).write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
