from .certificate import (
    Certificate, CertificateKind, CubicSplit, DisconnectedCertificate, SquareSplit, Violation
)
from .result import (
    AnswerKind, AugmentTrace, ClawDecomposition, CubicAugmentOutcome, CubicAugmentTrace,
    InducedTree, OutcomeKind, SolveResult, SquareAugmentOutcome, SquareAugmentTrace, Terminals
)

__all__ = [
    'Certificate', 'CertificateKind', 'CubicSplit', 'DisconnectedCertificate', 'SquareSplit', 'Violation',
    'AnswerKind', 'AugmentTrace', 'ClawDecomposition', 'CubicAugmentOutcome', 'CubicAugmentTrace',
    'InducedTree', 'OutcomeKind', 'SolveResult', 'SquareAugmentOutcome', 'SquareAugmentTrace', 'Terminals'
]
