"""
Report Models

Pydantic model for the CM-finiteness report.
"""

from typing import List, Optional

from pydantic import BaseModel, Field


class DynkinReport(BaseModel):
    schema_version: str = "gsemi.report/v1"
    type: str = Field(..., description="ADE type or the reason Q is not Dynkin")
    dynkin: bool
    root_count: Optional[int] = None
    roots: Optional[List[List[int]]] = Field(
        None, description="Positive roots in the standard labelling of the diagram"
    )
    m: int = Field(..., ge=0)
    cm_finite: bool
    gp_count: Optional[int] = Field(
        None, description="Non-projective indecomposables; null when infinite"
    )

    def render(self) -> str:
        finite = "yes" if self.cm_finite else "no"
        count = self.gp_count if self.gp_count is not None else "infinite"
        return f"CM-finite: {finite}; count = {count}"
