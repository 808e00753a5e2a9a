"""Basic schemas are defined here."""

from pydantic import BaseModel, ConfigDict, Field


class StrictModel(BaseModel):
    """Base for scenario schemas: unknown keys are errors so typos surface with their line."""

    model_config = ConfigDict(extra="forbid")


class Estimate(BaseModel):
    """Approximate number with its error bound and the quadrature step it was computed at."""

    value: float = Field(..., description="computed value")
    error_bound: float = Field(0.0, description="bound on the distance-evaluation error")
    quadrature_step: float = Field(0.0, description="largest quadrature cell diagonal, 0 for atomic measures")
