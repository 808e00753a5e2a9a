"""Asymptotics of optimal configurations: quantization constants, limit densities and convergence experiments."""

from .convergence import convergence_report
from .density import (
    empirical_measure,
    g_infinity,
    gamma_limit_value,
    limit_density,
    limit_energy,
    smooth_empirical,
)
from .theta import THETA_1, THETA_2, estimate_theta, known_theta, theta_lower_bound, uniform_cube
from .types import ConvergenceRow, DensityField, EmpiricalMeasure

__all__ = [
    "THETA_1",
    "THETA_2",
    "ConvergenceRow",
    "DensityField",
    "EmpiricalMeasure",
    "convergence_report",
    "empirical_measure",
    "estimate_theta",
    "g_infinity",
    "gamma_limit_value",
    "known_theta",
    "limit_density",
    "limit_energy",
    "smooth_empirical",
    "theta_lower_bound",
    "uniform_cube",
]
