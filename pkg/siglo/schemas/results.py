"""Result document schemas are defined here."""

from typing import Any, Literal

from pydantic import BaseModel, Field

from .base import Estimate


class SolveKResult(BaseModel):
    """k-point solver outcome."""

    solver: str
    k: int
    best: list[list[float]]
    value: Estimate
    per_restart_values: list[float]
    iterations_used: int
    bounding_radius: float = Field(..., description="certificate radius around bounding_center")
    bounding_center: list[float]
    solver_config: dict[str, Any]


class OptimalitySummary(BaseModel):
    """Optimality diagnostics of a region."""

    first_variation_values: list[float]
    balanced_projection_residual: float
    pushforward_mass_gap: float
    mass_gap: float
    dropped_ridge_mass: float


class RegionResult(BaseModel):
    """Region optimization and certification outcome."""

    centers: list[list[float]]
    radii: list[float]
    value: Estimate
    initial_value: Estimate
    ball_masses: list[float] = Field(..., description="positive mass of every ball, the stationarity quantity")
    optimality: OptimalitySummary
    separation: Literal["hulls_disjoint", "distance_exceeds_diameter", "none"]
    external_ball_condition: bool
    enlarged_mass: float | None = None
    trace: list[float]


class ThetaResult(BaseModel):
    """Quantization constant estimate."""

    n: int
    k: int
    theta: Estimate
    known: float | None
    lower_bound: float


class DensityResult(BaseModel):
    """Limit density diagnostics."""

    theta: float
    mass: float
    gamma_limit_value: Estimate
    limit_energy: float


class ConvergenceRowModel(BaseModel):
    """One row of a convergence table."""

    k: int
    F_value: float
    rescaled_gap: float
    hausdorff_to_M: float
    w1_to_rho: float
    extrapolated: bool


class ConvergeResult(BaseModel):
    """Convergence table with the energy it is compared to."""

    theta: float
    limit_energy: float
    reference_value: Estimate
    rows: list[ConvergenceRowModel]


class ProbeResult(BaseModel):
    """Nonexistence probe table."""

    rows: list[tuple[float, float]]
    strictly_decreasing: bool
    no_minimizer_evidence: bool


class CheckResult(BaseModel):
    """One validation check."""

    name: str
    status: Literal["pass", "fail", "skipped"]
    detail: str = ""


class ValidateResult(BaseModel):
    """Validation battery outcome."""

    passed: bool
    checks: list[CheckResult]


class ResultsDocument(BaseModel):
    """Content of results.json. Contains no timestamps so repeated runs are byte-identical."""

    name: str
    kind: str
    version: str
    seed: int
    scenario: dict[str, Any]
    config: dict[str, Any] = Field(..., description="solver defaults and constants the run used")
    results: dict[str, Any]
