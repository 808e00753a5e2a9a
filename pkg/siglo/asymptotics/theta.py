"""Quantization constants: known values, the volume lower bound and numerical estimates."""

import math
from typing import Literal

import numpy as np

from siglo.geometry import unit_ball_volume
from siglo.kpoint.solve import local_search
from siglo.kpoint.types import SolverConfig
from siglo.measure import GriddedDensity, MeasureComponent, SignedMeasure

THETA_1 = 0.25
THETA_2 = (4 + 3 * math.log(3)) / (6 * math.sqrt(2) * 3**0.75)


def known_theta(n: int) -> float | None:
    """Exact constant for n = 1 and the hexagonal closed form for n = 2; None otherwise."""
    return {1: THETA_1, 2: THETA_2}.get(n)


def theta_lower_bound(n: int) -> float:
    """omega_n^(-1/n) n / (n + 1), from comparing every Voronoi cell with a ball of the same volume."""
    return unit_ball_volume(n) ** (-1 / n) * n / (n + 1)


def uniform_cube(n: int, grid_res: int) -> SignedMeasure:
    """Unit density on [0, 1]^n sampled on grid_res cells per axis, no negative part."""
    density = GriddedDensity(lower=np.zeros(n), upper=np.ones(n), values=np.ones((grid_res,) * n))
    return SignedMeasure(plus=MeasureComponent(densities=(density,)), dimension=n)


def estimate_theta(  # pylint: disable=too-many-arguments
    n: int,
    k: int,
    restarts: int,
    seed: int,
    grid_res: int,
    *,
    init: Literal["sample", "lattice"] = "lattice",
    max_iters: int = 200,
    tol: float = 1e-7,
    max_workers: int = 1,
) -> float:
    """k^(1/n) times the smallest integral of dist(x, Sigma) over the unit cube the local search finds."""
    if n not in (1, 2, 3):
        raise ValueError(f"dimension must be 1, 2 or 3, got {n}")
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    config = SolverConfig(k=k, restarts=restarts, seed=seed, max_iters=max_iters, tol=tol, init=init)
    report = local_search(uniform_cube(n, grid_res), config, max_workers=max_workers)
    return k ** (1 / n) * report.value
