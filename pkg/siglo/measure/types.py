"""Signed measure data types are defined here."""

import math
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from siglo.exceptions.logic.measure import InvalidMeasureError


@dataclass(frozen=True)
class Atom:
    """Dirac mass `weight` placed at `location`."""

    location: tuple[float, ...]
    weight: float

    def __post_init__(self):
        object.__setattr__(self, "location", tuple(float(c) for c in np.atleast_1d(self.location)))
        if not self.weight > 0 or not math.isfinite(self.weight):
            raise InvalidMeasureError(f"atom weight must be positive and finite, got {self.weight!r}")
        if not all(math.isfinite(c) for c in self.location):
            raise InvalidMeasureError(f"atom location must be finite, got {self.location!r}")

    @property
    def dimension(self) -> int:
        return len(self.location)


@dataclass(frozen=True, eq=False)
class GriddedDensity:
    """Piecewise constant density on an axis-aligned box split into `resolution` cells per axis.

    `values` has shape `resolution` and is read in row-major order (last axis fastest).
    """

    lower: np.ndarray
    upper: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        lower = np.atleast_1d(np.asarray(self.lower, dtype=float))
        upper = np.atleast_1d(np.asarray(self.upper, dtype=float))
        values = np.asarray(self.values, dtype=float)
        if values.ndim == 0:
            raise InvalidMeasureError("density values must be an array with one axis per dimension")
        if lower.shape != upper.shape or values.ndim != lower.size:
            raise InvalidMeasureError(
                f"box of dimension {lower.size} does not match values of shape {values.shape}"
            )
        if not np.all(upper > lower):
            raise InvalidMeasureError(f"box must have positive volume, got lower={lower} upper={upper}")
        if not np.all(np.isfinite(values)) or np.any(values < 0):
            raise InvalidMeasureError("density values must be finite and nonnegative")
        for name, array in (("lower", lower), ("upper", upper), ("values", values)):
            array.setflags(write=False)
            object.__setattr__(self, name, array)

    @classmethod
    def from_function(
        cls,
        lower: Sequence[float],
        upper: Sequence[float],
        resolution: int | Sequence[int],
        func: Callable[[np.ndarray], np.ndarray],
    ) -> "GriddedDensity":
        """Sample `func` (vectorized over an (N, n) array of points) at cell midpoints."""
        lower_arr = np.atleast_1d(np.asarray(lower, dtype=float))
        shape = _resolution_tuple(resolution, lower_arr.size)
        midpoints = _cell_midpoints(lower_arr, np.atleast_1d(np.asarray(upper, dtype=float)), shape)
        values = np.broadcast_to(np.asarray(func(midpoints), dtype=float), (midpoints.shape[0],))
        return cls(lower=lower_arr, upper=upper, values=values.reshape(shape))

    @property
    def dimension(self) -> int:
        return self.lower.size

    @property
    def resolution(self) -> tuple[int, ...]:
        return tuple(self.values.shape)

    @property
    def cell_count(self) -> int:
        return int(self.values.size)

    @property
    def box_volume(self) -> float:
        return float(np.prod(self.upper - self.lower))

    @property
    def cell_widths(self) -> np.ndarray:
        return (self.upper - self.lower) / np.asarray(self.resolution, dtype=float)

    @property
    def cell_volume(self) -> float:
        return self.box_volume / self.cell_count

    @property
    def step(self) -> float:
        """Largest cell diagonal, the resolution any integral against this density is accurate to."""
        return float(np.linalg.norm(self.cell_widths))

    def mass(self) -> float:
        return math.fsum(self.values.ravel()) * self.box_volume / self.cell_count

    def midpoints(self) -> np.ndarray:
        """Cell midpoints as an (N, n) array in row-major cell order."""
        return _cell_midpoints(self.lower, self.upper, self.resolution)

    def positive_box(self) -> tuple[np.ndarray, np.ndarray] | None:
        """Smallest union of whole cells containing every cell of positive value."""
        indices = np.argwhere(self.values > 0)
        if indices.size == 0:
            return None
        widths = self.cell_widths
        return self.lower + indices.min(axis=0) * widths, self.lower + (indices.max(axis=0) + 1) * widths

    def with_values(self, values: np.ndarray) -> "GriddedDensity":
        return GriddedDensity(lower=self.lower, upper=self.upper, values=np.asarray(values).reshape(self.resolution))


@dataclass(frozen=True)
class QuadratureNodes:
    """Points with weights: `points` has shape (N, n), `weights` shape (N,)."""

    points: np.ndarray
    weights: np.ndarray

    def __len__(self) -> int:
        return int(self.weights.size)

    @property
    def total(self) -> float:
        return math.fsum(self.weights)


@dataclass(frozen=True, eq=False)
class MeasureComponent:
    """Nonnegative compactly supported measure made of atoms and gridded densities."""

    atoms: tuple[Atom, ...] = ()
    densities: tuple[GriddedDensity, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        object.__setattr__(self, "densities", tuple(self.densities))
        dims = {a.dimension for a in self.atoms} | {d.dimension for d in self.densities}
        if len(dims) > 1:
            raise InvalidMeasureError(f"component mixes dimensions {sorted(dims)}")

    @classmethod
    def from_arrays(cls, points: np.ndarray, weights: Iterable[float]) -> "MeasureComponent":
        points = np.asarray(points, dtype=float)
        if points.ndim == 1:
            points = points[:, None]
        return cls(atoms=tuple(Atom(tuple(p), float(w)) for p, w in zip(points, weights)))

    @property
    def dimension(self) -> int | None:
        if self.atoms:
            return self.atoms[0].dimension
        if self.densities:
            return self.densities[0].dimension
        return None

    @property
    def is_empty(self) -> bool:
        return not self.atoms and not self.densities

    @property
    def is_atomic(self) -> bool:
        return not self.densities

    @property
    def quadrature_step(self) -> float:
        """Largest cell diagonal over all densities, 0 for purely atomic components."""
        return max((d.step for d in self.densities), default=0.0)

    @cached_property
    def nodes(self) -> QuadratureNodes:
        from .quadrature import quadrature_nodes  # pylint: disable=import-outside-toplevel

        return quadrature_nodes(self)

    def support_box(self) -> tuple[np.ndarray, np.ndarray] | None:
        """Axis-aligned box containing every atom and every density cell of positive value."""
        lowers, uppers = [], []
        if self.atoms:
            locations = np.array([a.location for a in self.atoms])
            lowers.append(locations.min(axis=0))
            uppers.append(locations.max(axis=0))
        for density in self.densities:
            box = density.positive_box()
            if box is not None:
                lowers.append(box[0])
                uppers.append(box[1])
        if not lowers:
            return None
        return np.min(lowers, axis=0), np.max(uppers, axis=0)


@dataclass(frozen=True, eq=False)
class SignedMeasure:
    """phi = plus - minus on R^n."""

    plus: MeasureComponent
    minus: MeasureComponent = field(default_factory=MeasureComponent)
    dimension: int = 1

    def __post_init__(self):
        if self.dimension < 1:
            raise InvalidMeasureError(f"dimension must be positive, got {self.dimension}")
        for name, component in (("plus", self.plus), ("minus", self.minus)):
            if component.dimension is not None and component.dimension != self.dimension:
                raise InvalidMeasureError(
                    f"{name} part has dimension {component.dimension}, measure has {self.dimension}"
                )

    @property
    def quadrature_step(self) -> float:
        return max(self.plus.quadrature_step, self.minus.quadrature_step)

    @cached_property
    def signed_nodes(self) -> QuadratureNodes:
        """Nodes of both parts: plus weights positive, minus weights negative, plus nodes first."""
        plus, minus = self.plus.nodes, self.minus.nodes
        points = np.vstack([plus.points.reshape(-1, self.dimension), minus.points.reshape(-1, self.dimension)])
        return QuadratureNodes(points=points, weights=np.concatenate([plus.weights, -minus.weights]))

    def shifted(self, offset: Sequence[float]) -> "SignedMeasure":
        """Translate every part by `offset`."""
        offset_arr = np.asarray(offset, dtype=float)
        return SignedMeasure(
            plus=_shift_component(self.plus, offset_arr),
            minus=_shift_component(self.minus, offset_arr),
            dimension=self.dimension,
        )


def _shift_component(component: MeasureComponent, offset: np.ndarray) -> MeasureComponent:
    return MeasureComponent(
        atoms=tuple(Atom(tuple(np.asarray(a.location) + offset), a.weight) for a in component.atoms),
        densities=tuple(
            GriddedDensity(lower=d.lower + offset, upper=d.upper + offset, values=d.values) for d in component.densities
        ),
    )


def _resolution_tuple(resolution: int | Sequence[int], dimension: int) -> tuple[int, ...]:
    if isinstance(resolution, (int, np.integer)):
        return (int(resolution),) * dimension
    shape = tuple(int(r) for r in resolution)
    if len(shape) != dimension:
        raise InvalidMeasureError(f"resolution {shape} does not match dimension {dimension}")
    return shape


def _cell_midpoints(lower: np.ndarray, upper: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
    if any(r < 1 for r in shape):
        raise InvalidMeasureError(f"resolution must be positive, got {shape}")
    axes = [lower[i] + (np.arange(r) + 0.5) * (upper[i] - lower[i]) / r for i, r in enumerate(shape)]
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=1)
