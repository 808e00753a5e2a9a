"""Density fields, empirical measures and convergence table rows are defined here."""

import math
from dataclasses import dataclass

import numpy as np

from siglo.exceptions.logic.measure import InvalidMeasureError
from siglo.measure import GriddedDensity, MeasureComponent, QuadratureNodes

NORMALIZATION_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class DensityField:
    """Piecewise constant density on a grid; `normalized` fields integrate to 1."""

    grid: GriddedDensity
    normalized: bool = False

    def __post_init__(self):
        if self.normalized and abs(self.mass() - 1.0) > NORMALIZATION_TOLERANCE:
            raise InvalidMeasureError(f"normalized density integrates to {self.mass()!r} instead of 1")

    @classmethod
    def from_function(cls, lower, upper, resolution, func) -> "DensityField":
        return cls(GriddedDensity.from_function(lower, upper, resolution, func))

    @property
    def dimension(self) -> int:
        return self.grid.dimension

    @property
    def values(self) -> np.ndarray:
        return self.grid.values

    @property
    def cell_volume(self) -> float:
        return self.grid.cell_volume

    def midpoints(self) -> np.ndarray:
        return self.grid.midpoints()

    def mass(self) -> float:
        return math.fsum(self.grid.values.ravel() * self.grid.cell_volume)

    def value_at(self, points: np.ndarray) -> np.ndarray:
        """Value of the cell containing every point, 0 outside the box."""
        points = np.asarray(points, dtype=float).reshape(-1, self.dimension)
        index = np.floor((points - self.grid.lower) / self.grid.cell_widths).astype(np.int64)
        resolution = np.asarray(self.grid.resolution)
        # the upper face belongs to the last cell
        index = np.where(points == self.grid.upper, resolution - 1, index)
        inside = np.all((index >= 0) & (index < resolution), axis=1)
        values = np.zeros(points.shape[0])
        values[inside] = self.grid.values[tuple(index[inside].T)]
        return values

    def as_component(self) -> MeasureComponent:
        return MeasureComponent(densities=(self.grid,))


@dataclass(frozen=True, eq=False)
class EmpiricalMeasure:
    """Uniform probability on the points of a configuration; duplicated points carry summed weight."""

    points: np.ndarray
    weights: np.ndarray

    def __len__(self) -> int:
        return self.points.shape[0]

    @property
    def total(self) -> float:
        return math.fsum(self.weights)

    def as_nodes(self) -> QuadratureNodes:
        return QuadratureNodes(points=self.points, weights=self.weights)


@dataclass(frozen=True)
class ConvergenceRow:
    """One k of a convergence experiment. `extrapolated` marks dimension 1 where the limit theory is not proven."""

    k: int
    F_value: float  # pylint: disable=invalid-name
    rescaled_gap: float
    hausdorff_to_M: float  # pylint: disable=invalid-name
    w1_to_rho: float
    extrapolated: bool = False
