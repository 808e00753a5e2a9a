"""Result types of the region optimality checks are defined here."""

from dataclasses import dataclass, field
from enum import Enum


class SeparationCondition(str, Enum):
    """Which sufficient condition for M to avoid the negative support holds, checked in this order."""

    HULLS_DISJOINT = "hulls_disjoint"
    DISTANCE_EXCEEDS_DIAMETER = "distance_exceeds_diameter"
    NONE = "none"


@dataclass(frozen=True)
class BalancedProjection:
    """Comparison of the pushforwards of phi+ and phi- restricted to the complement of M onto M.

    `pushforward_mass_gap` is the mass of phi+ minus the mass of phi- outside M (the padding added before transport),
    `mass_gap` is phi+(M) - (m+ - m-).
    """

    residual: float
    pushforward_mass_gap: float
    mass_gap: float
    dropped_ridge_mass: float


@dataclass
class OptimalityReport:
    """First-variation values per test field together with the balanced projection and mass diagnostics."""

    first_variation_values: list[float] = field(default_factory=list)
    balanced_projection_residual: float = 0.0
    pushforward_mass_gap: float = 0.0
    mass_gap: float = 0.0
    dropped_ridge_mass: float = 0.0
