"""Solver configuration and report types for the k-point problem are defined here."""

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from siglo.geometry import PointConfig


@dataclass(frozen=True)
class CandidateGrid:
    """Regular grid of candidate locations: `resolution` points per axis from `lower` to `upper` inclusive."""

    lower: tuple[float, ...]
    upper: tuple[float, ...]
    resolution: tuple[int, ...]

    def points(self) -> np.ndarray:
        axes = [np.linspace(lo, hi, res) for lo, hi, res in zip(self.lower, self.upper, self.resolution)]
        return np.stack([a.ravel() for a in np.meshgrid(*axes, indexing="ij")], axis=1)


@dataclass(frozen=True)
class SolverConfig:  # pylint: disable=too-many-instance-attributes
    """Parameters of the multistart local search (and the candidate grid for exhaustive search).

    `init_step` of None picks the typical cell size diam(supp phi+) / k^(1/n).
    """

    k: int
    restarts: int = 8
    seed: int = 0
    max_iters: int = 200
    init_step: float | None = None
    step_decay: float = 0.5
    tol: float = 1e-7
    candidate_grid: CandidateGrid | None = None
    init: Literal["sample", "lattice"] = "sample"
    threads: int | None = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        if self.restarts < 1:
            raise ValueError(f"restarts must be at least 1, got {self.restarts}")
        if not 0 < self.step_decay < 1:
            raise ValueError(f"step_decay must lie in (0, 1), got {self.step_decay}")
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if self.init_step is not None and not self.init_step > 0:
            raise ValueError(f"init_step must be positive, got {self.init_step}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


@dataclass
class SolveReport:  # pylint: disable=too-many-instance-attributes
    """Best configuration found with its F value and solver diagnostics.

    `bounding_radius` is the certificate radius around `bounding_center` that contains the point of the essential
    part closest to the center; every essential point lies within `bounding_radius + 2 * support_radius`.
    """

    best: PointConfig
    value: float
    per_restart_values: list[float]
    iterations_used: int
    bounding_radius: float
    seed: int
    solver: str
    quadrature_step: float = 0.0
    bounding_center: np.ndarray | None = None
    restart_points: list[np.ndarray] = field(default_factory=list)
    traces: list[list[float]] = field(default_factory=list)


@dataclass(frozen=True)
class NonexistenceProbe:
    """Values f(r) = F({(r, 0)}) for the uniform unit circle against a unit atom at its center."""

    rows: list[tuple[float, float]]
    strictly_decreasing: bool
