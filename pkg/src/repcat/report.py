"""
Representation Category Models

Pydantic models for rep files read from disk and for every report the
representation layer emits.
"""

from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field

SCHEMA_VERSION = "gsemi.report/v1"
QUIVER_SCHEMA_VERSION = "gsemi.quiver/v1"


class ArrowSpec(BaseModel):
    name: str
    source: str
    target: str


class QuiverSpec(BaseModel):
    """Inline quiver inside a rep file."""

    vertices: List[str] = Field(..., min_length=1)
    arrows: List[ArrowSpec] = Field(default_factory=list)


class Multiplicity(BaseModel):
    class_: str = Field(..., alias="class", description="Arrow id of the arrow ideal")
    mult: int = Field(1, ge=0)


class StableRepFile(BaseModel):
    """On-disk stable representation.

    ``quiver`` is ``"A<n>"``, a path to a quiver file, or an inline quiver.
    """

    quiver: Union[str, QuiverSpec]
    vertices: Dict[str, List[Multiplicity]] = Field(default_factory=dict)
    arrows: Dict[str, List[List[int]]] = Field(default_factory=dict)


class VertexCheck(BaseModel):
    vertex: str
    injective: bool
    cokernel: str = Field(..., description="GP verdict for the cokernel of the assembled map")
    summands: List[str] = Field(default_factory=list)


class GpRepVerification(BaseModel):
    schema_version: str = SCHEMA_VERSION
    valid: bool
    failing_vertex: Optional[str] = None
    reason: Optional[str] = None
    vertices: List[VertexCheck] = Field(default_factory=list)


class LiftCheck(BaseModel):
    """Result of lifting a stable representation and stabilizing it again."""

    schema_version: str = SCHEMA_VERSION
    lifted: Dict[str, Any]
    stable_roundtrip: bool = Field(..., description="Ψ(lift(R)) ≅ R")
    verification: Optional[GpRepVerification] = None


class SnObjectModel(BaseModel):
    name: str
    shape: str
    projective: bool


class SnReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    algebra: str = ""
    n: int = Field(..., ge=1)
    total: int = Field(..., description="n·s + m·n(n+1)/2")
    non_projective: int
    objects: List[SnObjectModel]


class VertexExactness(BaseModel):
    vertex: str
    exact: bool
    dimensions: List[int] = Field(..., description="dim left, middle, right")


class SequenceCheck(BaseModel):
    schema_version: str = SCHEMA_VERSION
    sequence: str
    family: str
    exact: bool
    commutes: bool
    additive: bool
    vertices: List[VertexExactness] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.exact and self.commutes and self.additive


class DivisibilityReport(BaseModel):
    size: int = Field(..., ge=0)
    n: int = Field(..., ge=1)
    divisor: int = Field(..., ge=1)
    passed: bool


class ComponentReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    stable_class: List[str]
    n: int
    size: int
    exact: bool
    seed: str
    seed_tau_period: int
    vertices: List[str]
    arrows: List[List[str]]
    tau: Dict[str, str]
    divisibility: DivisibilityReport


class ComponentList(BaseModel):
    schema_version: str = SCHEMA_VERSION
    algebra: str = ""
    n: int = Field(..., ge=1)
    components: List[ComponentReport]


class QuiverNode(BaseModel):
    id: str
    label: str


class QuiverEdge(BaseModel):
    source: str
    target: str
    kind: str = Field("arrow", description="arrow | tau | relation")
    label: str = ""


class QuiverDocument(BaseModel):
    schema_version: str = QUIVER_SCHEMA_VERSION
    kind: str
    nodes: List[QuiverNode] = Field(default_factory=list)
    edges: List[QuiverEdge] = Field(default_factory=list)


class SequenceReport(BaseModel):
    """One almost split sequence with its maps rendered per A_n vertex."""

    left: str
    middles: List[str]
    right: str
    family: str
    f: List[List[List[str]]] = Field(..., description="Matrix of f at each vertex 1..n")
    g: List[List[List[str]]] = Field(..., description="Matrix of g at each vertex 1..n")
    check: Optional[SequenceCheck] = None


class SequenceList(BaseModel):
    schema_version: str = SCHEMA_VERSION
    algebra: str = ""
    n: int = Field(..., ge=1)
    sequences: List[SequenceReport]


class SyzygyAgreement(BaseModel):
    arrow: str
    syzygy: str = Field(..., description="Combinatorial Ω of the arrow ideal")
    agrees: bool = Field(..., description="Oracle syzygy is isomorphic to the combinatorial one")
    ext_dimensions: List[int]


class GprjSequenceCheck(BaseModel):
    sequence: str
    exact: bool


class AlgebraVerification(BaseModel):
    """Algebra-level oracle suite run by ``gsemi verify`` without a rep file."""

    schema_version: str = SCHEMA_VERSION
    algebra: str = ""
    prime: int
    ext_bound: int
    syzygies: List[SyzygyAgreement] = Field(default_factory=list)
    sequences: List[GprjSequenceCheck] = Field(default_factory=list)
    passed: bool


class DensityReport(BaseModel):
    """Random stable representations lifted, verified and stabilized again."""

    schema_version: str = SCHEMA_VERSION
    algebra: str = ""
    trials: int = Field(..., ge=0)
    passed: int = Field(..., ge=0)
    failures: List[str] = Field(default_factory=list)
