"""Point configurations, ball-complement regions and nets are defined here."""

from dataclasses import dataclass, field
from typing import Literal

import numpy as np
from scipy.spatial.distance import pdist

from siglo.exceptions.logic.geometry import EmptyPointSetError, InvalidRegionError

BOUNDARY_RELATIVE_SLACK = 1e-9


def as_points(points, dimension: int | None = None) -> np.ndarray:
    """Coerce a point or a list of points to an (N, n) float array."""
    array = np.asarray(points, dtype=float)
    if array.ndim == 0:
        array = array.reshape(1, 1)
    elif array.ndim == 1:
        array = array.reshape(-1, 1) if dimension == 1 else array.reshape(1, -1)
    return array


def set_diameter(points: np.ndarray) -> float:
    if points.shape[0] < 2:
        return 0.0
    if points.shape[1] == 1:
        return float(points.max() - points.min())
    return float(pdist(points).max())


@dataclass(frozen=True, eq=False)
class PointConfig:
    """Finite candidate set Sigma. Duplicates are allowed and do not count towards cardinality."""

    points: np.ndarray

    def __post_init__(self):
        points = as_points(self.points)
        if points.shape[0] == 0:
            raise EmptyPointSetError("point configuration")
        if not np.all(np.isfinite(points)):
            raise InvalidRegionError("point coordinates must be finite")
        points.setflags(write=False)
        object.__setattr__(self, "points", points)

    @classmethod
    def from_list(cls, points, dimension: int) -> "PointConfig":
        return cls(as_points(points, dimension))

    @property
    def dimension(self) -> int:
        return self.points.shape[1]

    def distinct(self) -> np.ndarray:
        """Distinct points in lexicographic order."""
        return np.unique(self.points, axis=0)

    @property
    def cardinality(self) -> int:
        return self.distinct().shape[0]

    def __len__(self) -> int:
        return self.points.shape[0]


@dataclass(frozen=True, eq=False)
class Net:
    """Finite point set within `covering_radius` (at most `mesh`) of every point of its target set."""

    points: np.ndarray
    mesh: float
    kind: Literal["surface", "volume"]
    cardinality_bound: float
    covering_radius: float

    def __len__(self) -> int:
        return self.points.shape[0]


@dataclass(frozen=True, eq=False)
class BallUnion:
    """Open union of balls, the complement of a ball-complement region."""

    centers: np.ndarray
    radii: np.ndarray

    def contains(self, points) -> np.ndarray:
        pts = as_points(points, self.centers.shape[1])
        return np.any(_center_distances(pts, self.centers) < self.radii[None, :], axis=1)


@dataclass(frozen=True, eq=False)
class BallComplementRegion:
    """M = complement of the union of open balls B_{r_i}(y_i).

    `anchors` are optional points known to lie in M; they only ever serve as distance candidates.
    """

    centers: np.ndarray
    radii: np.ndarray
    anchors: np.ndarray | None = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        radii = np.atleast_1d(np.asarray(self.radii, dtype=float))
        flat_1d = np.ndim(self.centers) == 1 and radii.size > 1 and np.size(self.centers) == radii.size
        centers = as_points(self.centers, 1 if flat_1d else None)
        if centers.shape[0] == 0:
            raise InvalidRegionError("at least one ball is required")
        if centers.shape[0] != radii.size:
            raise InvalidRegionError(f"{centers.shape[0]} centers but {radii.size} radii")
        if not np.all(np.isfinite(centers)) or not np.all(np.isfinite(radii)):
            raise InvalidRegionError("centers and radii must be finite")
        if np.any(radii <= 0):
            raise InvalidRegionError(f"all radii must be positive, got min {radii.min()!r}")
        centers.setflags(write=False)
        radii.setflags(write=False)
        object.__setattr__(self, "centers", centers)
        object.__setattr__(self, "radii", radii)
        if self.anchors is not None:
            anchors = as_points(self.anchors, centers.shape[1]).reshape(-1, centers.shape[1])
            anchors = anchors[self.contains(anchors)] if anchors.size else anchors
            anchors.setflags(write=False)
            object.__setattr__(self, "anchors", anchors)

    @property
    def dimension(self) -> int:
        return self.centers.shape[1]

    @property
    def min_radius(self) -> float:
        return float(self.radii.min())

    @property
    def max_radius(self) -> float:
        return float(self.radii.max())

    @property
    def centers_diameter(self) -> float:
        if "diameter" not in self._cache:
            self._cache["diameter"] = set_diameter(self.centers)
        return self._cache["diameter"]

    @property
    def scene_diameter(self) -> float:
        return self.centers_diameter + 2 * self.max_radius

    @property
    def tie_tol(self) -> float:
        return 1e-7 * self.scene_diameter

    def gap(self, points) -> np.ndarray:
        """min_i (|x - y_i| - r_i): the distance to the union of balls for x in M, negative inside the union."""
        pts = as_points(points, self.dimension)
        result = np.empty(pts.shape[0])
        for chunk in _chunks(pts.shape[0], self.centers.shape[0]):
            result[chunk] = np.min(_center_distances(pts[chunk], self.centers) - self.radii[None, :], axis=1)
        return result

    def contains(self, points) -> np.ndarray:
        """Membership in the closed set M, with a relative slack of 1e-9 on every sphere."""
        pts = as_points(points, self.dimension)
        slack = BOUNDARY_RELATIVE_SLACK * self.radii[None, :]
        result = np.empty(pts.shape[0], dtype=bool)
        for chunk in _chunks(pts.shape[0], self.centers.shape[0]):
            result[chunk] = np.all(_center_distances(pts[chunk], self.centers) >= self.radii[None, :] - slack, axis=1)
        return result

    def covered_by(self, points) -> np.ndarray:
        """Boolean (N, m) matrix: point lies in the open ball i (beyond the boundary slack)."""
        pts = as_points(points, self.dimension)
        slack = BOUNDARY_RELATIVE_SLACK * self.radii[None, :]
        return _center_distances(pts, self.centers) < self.radii[None, :] - slack

    def complement(self) -> BallUnion:
        return BallUnion(centers=self.centers, radii=self.radii)

    def with_radii(self, radii) -> "BallComplementRegion":
        """Same centers, new radii; anchors are dropped since they may no longer lie in M."""
        return BallComplementRegion(centers=self.centers, radii=np.asarray(radii, dtype=float))


def _center_distances(points: np.ndarray, centers: np.ndarray) -> np.ndarray:
    return np.linalg.norm(points[:, None, :] - centers[None, :, :], axis=2)


def _chunks(count: int, width: int, budget: int = 2_000_000) -> list[slice]:
    size = max(1, budget // max(1, width))
    return [slice(start, min(start + size, count)) for start in range(0, count, size)] or [slice(0, 0)]
