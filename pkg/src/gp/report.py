"""
Report Models

Pydantic models for every algebra-level report. JSON output and the
published schemas both come from these classes.
"""

from typing import List, Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = "gsemi.report/v1"


class ClassSummary(BaseModel):
    """One stable class: its arrows in syzygy order and its period."""

    arrows: List[str] = Field(..., description="Arrows of the class in syzygy order")
    period: int = Field(..., ge=1, description="Syzygy period l(G)")


class GsemisimpleReport(BaseModel):
    gsemisimple: bool
    reason: str = Field(..., description="Why the algebra is G-semisimple")
    m: int = Field(..., ge=0, description="Number of non-projective GP indecomposables")
    classes: List[ClassSummary]
    cm_finite: bool = Field(..., description="Finitely many indecomposable GP modules")


class OneGorensteinReport(BaseModel):
    one_gorenstein: bool
    offending_arrows: List[str] = Field(
        default_factory=list,
        description="Arrows whose ideal is neither projective nor perfect",
    )
    perfect_arrows: List[str] = Field(default_factory=list)
    projective_arrows: List[str] = Field(
        default_factory=list, description="Arrows whose ideal is projective"
    )


class SingularityDescriptor(BaseModel):
    """Formal product of orbit categories D^b(mod k)/[l], one per class."""

    schema_version: str = SCHEMA_VERSION
    algebra: str = ""
    periods: List[int] = Field(..., description="Multiset {l(G)} in ascending order")
    text: str

    def render(self) -> str:
        return self.text


class T2Descriptor(BaseModel):
    """Stable monomorphism category at n = 2: one cyclic factor of size 3·l(G) per class."""

    schema_version: str = SCHEMA_VERSION
    algebra: str = ""
    cycle_lengths: List[int]
    text: str


class AnalysisReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    algebra: str = Field("", description="Algebra name")
    vertices: int = Field(..., ge=1)
    arrows: int = Field(..., ge=0)
    relations: int = Field(..., ge=0)
    m: int = Field(..., ge=0)
    classes: List[ClassSummary]
    gsemisimple: bool
    cm_finite: bool
    one_gorenstein: bool
    offending_arrows: List[str] = Field(default_factory=list)
    singularity: List[int] = Field(..., description="Periods of the singularity descriptor")
    singularity_text: Optional[str] = None

    def render(self) -> str:
        """Plain-text rendering used by ``gsemi analyze``."""
        yes = {True: "yes", False: "no"}
        lines = [
            f"Algebra: {self.algebra or '<unnamed>'} ({self.vertices} vertices, "
            f"{self.arrows} arrows, {self.relations} relations)",
            f"m = {self.m}",
            f"Stable classes: {len(self.classes)}",
        ]
        for cls in self.classes:
            members = " -> ".join(f"{a}Λ" for a in cls.arrows)
            lines.append(f"  [{cls.arrows[0]}Λ] l = {cls.period}: {members}")
        lines.append(f"G-semisimple: {yes[self.gsemisimple]} (quadratic monomial)")
        lines.append(f"CM-finite: {yes[self.cm_finite]}")
        gor = yes[self.one_gorenstein]
        if self.offending_arrows:
            gor += f" (offending arrows: {', '.join(self.offending_arrows)})"
        lines.append(f"1-Gorenstein: {gor}")
        lines.append(f"Singularity category: {self.singularity_text}")
        return "\n".join(lines)
