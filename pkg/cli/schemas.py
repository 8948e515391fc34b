from pydantic import BaseModel, ConfigDict, Field
from typing import Optional, List, Union

from core.symmetry import Orientations, SymmKind


# Continued fraction Schemas
class CfOutput(BaseModel):
    alpha: str
    head: List[int]
    period: Optional[List[int]] = None
    text: str


class StepsOutput(BaseModel):
    alpha: str
    trace: str
    halted: bool


class ConvergentRecord(BaseModel):
    index: int
    p: int
    q: int


class ConvergentsOutput(BaseModel):
    alpha: str
    convergents: List[ConvergentRecord]


# Packing Schemas
class CircleRecord(BaseModel):
    label: Optional[List[int]] = None
    sqrt_curv: Optional[str] = None
    curv: str
    curv_f64: float
    center: Optional[List[float]] = None
    radius: Optional[float] = None
    line_height: Optional[float] = None
    generation: Optional[int] = None


class ReplaceRow(BaseModel):
    n: int
    step: Optional[str] = None
    x_label: List[int]
    y_label: List[int]
    ratio_exact: str
    ratio_f64: float


class ReplaceOutput(BaseModel):
    alpha: str
    trace: str
    rows: List[ReplaceRow]


# Symmetry Schemas
class PellRecord(BaseModel):
    x: int
    y: int
    rhs: int


class SimilarOutput(BaseModel):
    alpha: str
    beta: str
    similar: bool
    witness: Optional[List[List[int]]] = None
    det: Optional[int] = None
    orientations: Orientations


class SymmOutput(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    kind: SymmKind
    generator: Optional[List[List[int]]] = None
    det: Optional[int] = None
    scale_sq: Optional[str] = None
    pell: Optional[PellRecord] = None
    orientation_reversing: bool
    class_: Union[List[int], str] = Field(alias="class")


class ClassOutput(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    alpha: str
    class_: Union[List[int], str] = Field(alias="class")


# Render Schemas
class RenderOutput(BaseModel):
    alpha: str
    out: Optional[str] = None
    elements: int
    bytes: int
