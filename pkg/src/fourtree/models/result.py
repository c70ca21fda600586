from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from typing import Any, Dict, List, Optional, Union
from enum import Enum

from .certificate import Certificate, CubicSplit, SquareSplit


class Terminals(BaseModel):
    """Pendant terminals x1..xk, optionally mapped back to the query vertices they were attached to"""
    model_config = ConfigDict(frozen=True)

    vertices: List[int] = Field(..., description="Terminal vertices in query order")
    gadget_map: Dict[int, int] = Field(default_factory=dict, description="Terminal -> original query vertex")

    @field_validator("vertices")
    @classmethod
    def validate_vertices(cls, v):
        if not v:
            raise ValueError("At least one terminal is required")
        if len(set(v)) != len(v):
            raise ValueError(f"Terminals must be distinct, got {v}")
        return list(v)

    def __getitem__(self, index: int) -> int:
        return self.vertices[index]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


class InducedTree(BaseModel):
    """Vertex set inducing a tree that contains the required vertices"""
    model_config = ConfigDict(frozen=True)

    vertices: List[int] = Field(..., description="Tree vertices, sorted")
    required: List[int] = Field(default_factory=list, description="Query vertices the tree covers")

    @field_validator("vertices")
    @classmethod
    def validate_vertices(cls, v):
        if not v:
            raise ValueError("A tree has at least one vertex")
        return sorted(set(v))

    @model_validator(mode="after")
    def check_coverage(self):
        missing = set(self.required) - set(self.vertices)
        if missing:
            raise ValueError(f"Tree does not contain required vertices {sorted(missing)}")
        return self

    def vertex_set(self) -> set:
        return set(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


class ClawDecomposition(BaseModel):
    """A tree with three leaves seen as a center and three legs"""
    center: int = Field(..., description="The unique vertex of degree three")
    legs: List[List[int]] = Field(..., description="Paths from the center to each leaf, center first")

    @field_validator("legs")
    @classmethod
    def validate_legs(cls, v):
        if len(v) != 3:
            raise ValueError(f"A claw has three legs, got {len(v)}")
        return v


class AnswerKind(str, Enum):
    """Decision of a solver run"""
    TREE = "tree"
    NO_TREE = "no-tree"


class SolveResult(BaseModel):
    """Outcome of four_in_a_tree: a covering tree or a certificate that none exists"""
    answer: AnswerKind = Field(..., description="Decision")
    query: List[int] = Field(..., description="Query vertices y1..y4 of the input graph")
    tree: Optional[InducedTree] = Field(None, description="Covering tree in the input graph")
    certificate: Optional[Certificate] = Field(None, description="No-tree certificate")
    gadgeted: bool = Field(False, description="True when the certificate refers to the graph with pendant terminals attached")
    steps: int = Field(0, description="Number of augmentation steps performed")

    @model_validator(mode="after")
    def check_payload(self):
        if self.answer == AnswerKind.TREE and self.tree is None:
            raise ValueError("A tree answer needs a tree")
        if self.answer == AnswerKind.NO_TREE and self.certificate is None:
            raise ValueError("A no-tree answer needs a certificate")
        return self

    @property
    def found(self) -> bool:
        return self.answer == AnswerKind.TREE

    def to_json_dict(self) -> Dict[str, Any]:
        """Wire form of the result"""
        if self.found:
            return {"answer": self.answer.value, "vertices": list(self.tree.vertices), "query": list(self.query)}
        return {
            "answer": self.answer.value,
            "certificate": self.certificate.model_dump(by_alias=True, mode="json"),
            "gadgeted": self.gadgeted,
            "query": list(self.query),
        }


class OutcomeKind(str, Enum):
    """Possible results of one augmentation step"""
    FOUND_TREE = "found-tree"
    GREW_SQUARE = "grew-square"
    BECAME_CUBIC = "became-cubic"
    GREW_CUBIC = "grew-cubic"


class AugmentTrace(BaseModel):
    """Decisions taken while absorbing one vertex"""
    v: int = Field(..., description="The vertex being absorbed")
    branch: str = Field(..., description="Which case of the procedure fired")
    anchor: Optional[int] = Field(None, description="Chosen A-neighbor of v")
    anchor_index: Optional[int] = Field(None, description="Part index of the anchor, 0-based")
    q_path: List[int] = Field(default_factory=list, description="Path Q from v to w")
    complete_set: List[int] = Field(default_factory=list, description="Vertices of the reach set complete to the relevant S parts")
    reach: List[int] = Field(default_factory=list, description="Y")
    reach_first: List[int] = Field(default_factory=list, description="Y1")
    reach_second: List[int] = Field(default_factory=list, description="Y2")
    reach_third: List[int] = Field(default_factory=list, description="Y3")
    symmetry: List[int] = Field(default_factory=lambda: [0, 1, 2, 3], description="perm[j] = stored index of normalized index j")


class SquareAugmentTrace(AugmentTrace):
    """Trace of a square augmentation"""
    pass


class CubicAugmentTrace(AugmentTrace):
    """Trace of a cubic augmentation"""
    pass


class SquareAugmentOutcome(BaseModel):
    """FoundTree, BecameCubic or GrewSquare"""
    kind: OutcomeKind = Field(..., description="Which outcome occurred")
    tree: Optional[InducedTree] = Field(None, description="Tree covering the terminals")
    split: Optional[Union[SquareSplit, CubicSplit]] = Field(None, description="New split when no tree was found")
    domain: List[int] = Field(default_factory=list, description="Domain of the new split")
    trace: SquareAugmentTrace = Field(..., description="Decisions taken")


class CubicAugmentOutcome(BaseModel):
    """FoundTree or GrewCubic"""
    kind: OutcomeKind = Field(..., description="Which outcome occurred")
    tree: Optional[InducedTree] = Field(None, description="Tree covering the terminals")
    split: Optional[CubicSplit] = Field(None, description="New split when no tree was found")
    domain: List[int] = Field(default_factory=list, description="Domain of the new split")
    trace: CubicAugmentTrace = Field(..., description="Decisions taken")
