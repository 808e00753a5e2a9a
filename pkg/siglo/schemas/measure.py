"""Signed measure schemas of scenario files are defined here."""

import numpy as np
from pydantic import Field, model_validator

from siglo.measure import Atom, GriddedDensity, MeasureComponent, SignedMeasure
from siglo.measure.expressions import compile_expression

from .base import StrictModel


class AtomRow(StrictModel):
    """Point mass."""

    location: list[float] = Field(..., min_length=1, description="coordinates of the atom")
    weight: float = Field(..., gt=0, description="mass of the atom")


class DensitySpec(StrictModel):
    """Piecewise constant density on a box, given by an expression of the coordinates or by its cell values."""

    lower: list[float] = Field(..., min_length=1)
    upper: list[float] = Field(..., min_length=1)
    resolution: list[int] = Field(..., min_length=1, description="number of cells per axis")
    expression: str | None = Field(None, description="numpy formula in x0.., x, y, z and r, sampled at cell midpoints")
    cells: list[float] | None = Field(None, description="cell values in row-major order")

    @model_validator(mode="after")
    def _check_source(self) -> "DensitySpec":
        if (self.expression is None) == (self.cells is None):
            raise ValueError("exactly one of `expression` and `cells` is required")
        if not len(self.lower) == len(self.upper) == len(self.resolution):
            raise ValueError("lower, upper and resolution must have one entry per dimension")
        if any(res < 1 for res in self.resolution):
            raise ValueError("resolution entries must be positive")
        if self.cells is not None and len(self.cells) != int(np.prod(self.resolution)):
            raise ValueError(f"{len(self.cells)} cell values given for {int(np.prod(self.resolution))} cells")
        return self

    def to_density(self) -> GriddedDensity:
        if self.expression is not None:
            func = compile_expression(self.expression, len(self.lower))
            return GriddedDensity.from_function(self.lower, self.upper, self.resolution, func)
        return GriddedDensity(
            lower=self.lower, upper=self.upper, values=np.asarray(self.cells, dtype=float).reshape(self.resolution)
        )


class ComponentSpec(StrictModel):
    """Nonnegative measure made of atoms and densities."""

    atoms: list[AtomRow] = Field(default_factory=list)
    densities: list[DensitySpec] = Field(default_factory=list)

    def to_component(self) -> MeasureComponent:
        return MeasureComponent(
            atoms=tuple(Atom(tuple(a.location), a.weight) for a in self.atoms),
            densities=tuple(d.to_density() for d in self.densities),
        )


class MeasureSpec(StrictModel):
    """phi = plus - minus."""

    plus: ComponentSpec
    minus: ComponentSpec = Field(default_factory=ComponentSpec)

    def to_measure(self, dimension: int) -> SignedMeasure:
        return SignedMeasure(plus=self.plus.to_component(), minus=self.minus.to_component(), dimension=dimension)
