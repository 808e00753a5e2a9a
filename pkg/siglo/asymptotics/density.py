"""Limit density of optimal point configurations and the energy of point densities on a region."""

import math
from collections.abc import Sequence

import numpy as np

from siglo.exceptions.logic.solver import EmptyCandidateListError, ZeroDensityIntegralError
from siglo.geometry import BallComplementRegion, PointConfig
from siglo.measure import GriddedDensity

from .types import DensityField, EmpiricalMeasure

MASS_OUTSIDE_TOLERANCE = 1e-9


def empirical_measure(sigma: PointConfig) -> EmpiricalMeasure:
    """One atom per distinct point with weight (multiplicity / #sigma)."""
    points, counts = np.unique(sigma.points, axis=0, return_counts=True)
    return EmpiricalMeasure(points=points, weights=counts / len(sigma))


def limit_density(f_plus: DensityField, m: BallComplementRegion) -> DensityField:
    """rho = lambda f+^(n/(n+1)) on cells whose midpoint lies in M, 0 elsewhere, normalized to mass 1."""
    n = f_plus.dimension
    inside = m.contains(f_plus.midpoints())
    powered = np.where(inside, f_plus.values.ravel() ** (n / (n + 1)), 0.0)
    integral = math.fsum(powered) * f_plus.cell_volume
    if not integral > 0:
        raise ZeroDensityIntegralError()
    grid = f_plus.grid.with_values((powered / integral).reshape(f_plus.grid.resolution))
    return DensityField(grid, normalized=True)


def gamma_limit_value(rho: DensityField, m: BallComplementRegion, f_plus: DensityField, theta: float) -> float:
    """theta * integral over M of f+ rho^(-1/n), on the cells of f+; +inf when rho vanishes where f+ does not."""
    if not theta > 0:
        raise ValueError(f"theta must be positive, got {theta}")
    n = f_plus.dimension
    midpoints = f_plus.midpoints()
    f_values = f_plus.values.ravel()
    active = m.contains(midpoints) & (f_values > 0)
    if not np.any(active):
        return 0.0
    rho_values = rho.value_at(midpoints[active])
    if np.any(rho_values <= 0):
        return math.inf
    return theta * math.fsum(f_values[active] * rho_values ** (-1 / n)) * f_plus.cell_volume


def limit_energy(f_plus: DensityField, m: BallComplementRegion, theta: float) -> float:
    """Energy at the limit density: theta (integral over M of f+^(n/(n+1)))^((n+1)/n)."""
    return gamma_limit_value(limit_density(f_plus, m), m, f_plus, theta)


def smooth_empirical(mu: EmpiricalMeasure, like: DensityField, bins_per_axis: int | None = None) -> DensityField:
    """Histogram density of an empirical measure over the box of `like`.

    The default bin count puts about four points in every bin of a uniform configuration.
    """
    n = like.dimension
    if bins_per_axis is None:
        bins_per_axis = max(1, int(math.floor((len(mu) / 4) ** (1 / n))))
    edges = [np.linspace(lo, hi, bins_per_axis + 1) for lo, hi in zip(like.grid.lower, like.grid.upper)]
    counts, _ = np.histogramdd(mu.points, bins=edges, weights=mu.weights)
    bin_volume = like.grid.box_volume / bins_per_axis**n
    grid = GriddedDensity(lower=like.grid.lower, upper=like.grid.upper, values=counts / bin_volume)
    field = DensityField(grid)
    return DensityField(grid, normalized=abs(field.mass() - 1.0) <= MASS_OUTSIDE_TOLERANCE)


def _mass_outside(mu: DensityField | EmpiricalMeasure, m: BallComplementRegion) -> float:
    if isinstance(mu, EmpiricalMeasure):
        return math.fsum(mu.weights[~m.contains(mu.points)])
    outside = ~m.contains(mu.midpoints())
    return math.fsum(mu.values.ravel()[outside]) * mu.cell_volume


def g_infinity(
    mu: DensityField | EmpiricalMeasure,
    candidate_regions: Sequence[BallComplementRegion],
    f_plus: DensityField,
    theta: float,
    tol: float = MASS_OUTSIDE_TOLERANCE,
) -> float:
    """Smallest energy of mu over the candidate regions carrying it; +inf when none does.

    Empirical measures are smoothed onto a histogram over the box of f+ first.
    """
    if not candidate_regions:
        raise EmptyCandidateListError()
    density = smooth_empirical(mu, f_plus) if isinstance(mu, EmpiricalMeasure) else mu
    best = math.inf
    for region in candidate_regions:
        if _mass_outside(mu, region) > tol:
            continue
        best = min(best, gamma_limit_value(density, region, f_plus, theta))
    return best
