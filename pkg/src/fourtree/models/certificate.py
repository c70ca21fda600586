from pydantic import BaseModel, ConfigDict, Field, field_validator
from typing import Annotated, List, Literal, Set, Union
from enum import Enum


class CertificateKind(str, Enum):
    """Kinds of no-tree certificates"""
    SQUARE = "square"
    CUBIC = "cubic"
    DISCONNECTED = "disconnected"


class Violation(BaseModel):
    """A single failed item of a structure definition"""
    item: int = Field(..., description="Number of the violated item in the structure definition")
    message: str = Field(..., description="Human readable description of the failure")
    witness: List[int] = Field(default_factory=list, description="Vertices exhibiting the failure")

    def __str__(self) -> str:
        witness = f" (witness {self.witness})" if self.witness else ""
        return f"item {self.item}: {self.message}{witness}"


def _sorted_parts(parts: List[List[int]], count: int, name: str) -> List[List[int]]:
    if len(parts) != count:
        raise ValueError(f"{name} must have exactly {count} parts, got {len(parts)}")
    cleaned = []
    for index, part in enumerate(parts):
        if len(set(part)) != len(part):
            raise ValueError(f"{name}[{index}] lists a vertex twice")
        cleaned.append(sorted(part))
    return cleaned


def _check_terminals(terminals: List[int]) -> List[int]:
    if len(terminals) != 4:
        raise ValueError(f"Exactly four terminals are required, got {len(terminals)}")
    if len(set(terminals)) != 4:
        raise ValueError(f"Terminals must be distinct, got {terminals}")
    return list(terminals)


class SquareSplit(BaseModel):
    """Split (A1..A4, S1..S4, R) of a square structure"""
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    kind: Literal["square"] = Field("square", description="Certificate discriminator")
    a_parts: List[List[int]] = Field(..., alias="A", description="A1..A4, A_i contains terminal x_i")
    s_parts: List[List[int]] = Field(..., alias="S", description="S1..S4, S_i = N(A_i)")
    r_part: List[int] = Field(default_factory=list, alias="R", description="Remaining vertices, N(R) inside S")
    terminals: List[int] = Field(..., description="Terminals x1..x4 in part order")

    @field_validator("a_parts")
    @classmethod
    def validate_a_parts(cls, v):
        return _sorted_parts(v, 4, "A")

    @field_validator("s_parts")
    @classmethod
    def validate_s_parts(cls, v):
        return _sorted_parts(v, 4, "S")

    @field_validator("r_part")
    @classmethod
    def validate_r_part(cls, v):
        return _sorted_parts([v], 1, "R")[0]

    @field_validator("terminals")
    @classmethod
    def validate_terminals(cls, v):
        return _check_terminals(v)

    def parts(self) -> List[List[int]]:
        """All nine parts in the order A1..A4, S1..S4, R"""
        return [*self.a_parts, *self.s_parts, self.r_part]

    def domain(self) -> Set[int]:
        return {u for part in self.parts() for u in part}


class CubicSplit(BaseModel):
    """Split (A1..A4, B1..B4, S1..S8, R) of a cubic structure"""
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    kind: Literal["cubic"] = Field("cubic", description="Certificate discriminator")
    a_parts: List[List[int]] = Field(..., alias="A", description="A1..A4, A_i contains terminal x_i")
    b_parts: List[List[int]] = Field(..., alias="B", description="B1..B4")
    s_parts: List[List[int]] = Field(..., alias="S", description="S1..S8")
    r_part: List[int] = Field(default_factory=list, alias="R", description="Remaining vertices, N(R) inside S5..S8")
    terminals: List[int] = Field(..., description="Terminals x1..x4 in part order")

    @field_validator("a_parts")
    @classmethod
    def validate_a_parts(cls, v):
        return _sorted_parts(v, 4, "A")

    @field_validator("b_parts")
    @classmethod
    def validate_b_parts(cls, v):
        return _sorted_parts(v, 4, "B")

    @field_validator("s_parts")
    @classmethod
    def validate_s_parts(cls, v):
        return _sorted_parts(v, 8, "S")

    @field_validator("r_part")
    @classmethod
    def validate_r_part(cls, v):
        return _sorted_parts([v], 1, "R")[0]

    @field_validator("terminals")
    @classmethod
    def validate_terminals(cls, v):
        return _check_terminals(v)

    def parts(self) -> List[List[int]]:
        """All seventeen parts in the order A1..A4, B1..B4, S1..S8, R"""
        return [*self.a_parts, *self.b_parts, *self.s_parts, self.r_part]

    def domain(self) -> Set[int]:
        return {u for part in self.parts() for u in part}


class DisconnectedCertificate(BaseModel):
    """A connected component that holds some terminals but not all of them"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["disconnected"] = Field("disconnected", description="Certificate discriminator")
    component: List[int] = Field(..., description="Vertices of one connected component")
    terminals: List[int] = Field(..., description="All terminals of the instance")
    separated: List[int] = Field(..., description="Terminals lying outside the component")

    @field_validator("component", "separated")
    @classmethod
    def validate_sorted(cls, v):
        if len(set(v)) != len(v):
            raise ValueError("Vertex listed twice")
        return sorted(v)


Certificate = Annotated[
    Union[SquareSplit, CubicSplit, DisconnectedCertificate],
    Field(discriminator="kind"),
]
