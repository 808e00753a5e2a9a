"""Scenario and result schemas are defined here."""

from .base import Estimate, StrictModel
from .measure import AtomRow, ComponentSpec, DensitySpec, MeasureSpec
from .results import (
    CheckResult,
    ConvergeResult,
    ConvergenceRowModel,
    DensityResult,
    OptimalitySummary,
    ProbeResult,
    RegionResult,
    ResultsDocument,
    SolveKResult,
    ThetaResult,
    ValidateResult,
)
from .scenario import (
    ConvergeTask,
    DensityTask,
    ExampleTask,
    GridSpec,
    ProbeTask,
    RegionSpec,
    RegionTask,
    Scenario,
    SolveKTask,
    SolverParams,
    ThetaTask,
    ValidateTask,
)

__all__ = [
    "AtomRow",
    "CheckResult",
    "ComponentSpec",
    "ConvergeResult",
    "ConvergeTask",
    "ConvergenceRowModel",
    "DensityResult",
    "DensitySpec",
    "DensityTask",
    "Estimate",
    "ExampleTask",
    "GridSpec",
    "MeasureSpec",
    "OptimalitySummary",
    "ProbeResult",
    "ProbeTask",
    "RegionResult",
    "RegionSpec",
    "RegionTask",
    "ResultsDocument",
    "Scenario",
    "SolveKResult",
    "SolveKTask",
    "SolverParams",
    "StrictModel",
    "ThetaResult",
    "ThetaTask",
    "ValidateResult",
    "ValidateTask",
]
