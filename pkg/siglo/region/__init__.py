"""Unconstrained region problem: canonical regions, radius optimization and optimality diagnostics."""

from .canonical import canonicalize, negative_atoms
from .optimality import (
    balanced_projection_residual,
    constant_field,
    enlarged_mass,
    first_variation,
    mass_check,
    optimality_report,
    radial_field,
    separation_check,
)
from .radii import golden_section, optimize_radii, stationary_radius
from .types import BalancedProjection, OptimalityReport, SeparationCondition

__all__ = [
    "BalancedProjection",
    "OptimalityReport",
    "SeparationCondition",
    "balanced_projection_residual",
    "canonicalize",
    "constant_field",
    "enlarged_mass",
    "first_variation",
    "golden_section",
    "mass_check",
    "negative_atoms",
    "optimality_report",
    "optimize_radii",
    "radial_field",
    "separation_check",
    "stationary_radius",
]
