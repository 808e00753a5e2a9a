"""Distances and projections to point configurations and ball-complement regions are defined here."""

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree
from scipy.spatial.distance import directed_hausdorff

from siglo.exceptions.logic.geometry import EmptyPointSetError, InvalidRegionError

from .nets import TWO_PI, boundary_arcs_2d, boundary_points_1d, surface_net
from .types import BallComplementRegion, BallUnion, PointConfig, as_points

_NET_NEIGHBOURS = 8


def dist_to_config(x, sigma: PointConfig) -> float:
    """Euclidean distance from x to the nearest point of sigma."""
    point = as_points(x, sigma.dimension).reshape(-1)
    return float(np.min(np.linalg.norm(sigma.points - point, axis=1)))


def config_distances(points: np.ndarray, sigma: PointConfig) -> tuple[np.ndarray, np.ndarray]:
    """Distances from every row of `points` to sigma and the index of the nearest sigma point."""
    distances, nearest = cKDTree(sigma.points).query(as_points(points, sigma.dimension))
    return np.asarray(distances, dtype=float), np.asarray(nearest, dtype=np.int64)


@dataclass(frozen=True)
class RegionDistances:
    """Vectorized `dist(x, M)` results: true distance lies in [values - error_bounds, values]."""

    values: np.ndarray
    error_bounds: np.ndarray
    projections: np.ndarray
    unique: np.ndarray


def region_distances(points, m: BallComplementRegion, mesh: float) -> RegionDistances:
    """Distances, projections and projection uniqueness for every row of `points`.

    Points of M are exact with themselves as projection. Elsewhere the lower bound max_i (r_i - |x - y_i|) is
    attained whenever the radial projection onto the deepest ball lies in M; in dimensions 1 and 2 the boundary
    is decomposed exactly, in higher dimensions the surface net of the given mesh brackets the distance.
    """
    if not mesh > 0:
        raise InvalidRegionError(f"mesh must be positive, got {mesh!r}")
    pts = as_points(points, m.dimension)
    count = pts.shape[0]
    values = np.zeros(count)
    errors = np.zeros(count)
    projections = pts.copy()
    unique = np.ones(count, dtype=bool)

    outside = np.flatnonzero(~m.contains(pts))
    if outside.size == 0:
        return RegionDistances(values, errors, projections, unique)

    if m.dimension == 1:
        result = _nearest_on_points(pts[outside], boundary_points_1d(m), m.tie_tol)
    elif m.dimension == 2:
        result = _nearest_on_arcs(pts[outside], m)
    else:
        result = _nearest_sampled(pts[outside], m, mesh)

    values[outside], errors[outside], projections[outside], unique[outside] = result
    return RegionDistances(values, errors, projections, unique)


def dist_to_region(x, m: BallComplementRegion, mesh: float) -> tuple[float, float]:
    """Distance from x to M and its error bound."""
    result = region_distances(as_points(x, m.dimension).reshape(1, -1), m, mesh)
    return float(result.values[0]), float(result.error_bounds[0])


def project_region(x, m: BallComplementRegion, mesh: float) -> tuple[np.ndarray, bool]:
    """A nearest point of M to x and whether the nearest point is unique (up to the region's tie tolerance)."""
    result = region_distances(as_points(x, m.dimension).reshape(1, -1), m, mesh)
    return result.projections[0], bool(result.unique[0])


def _nearest_on_points(pts: np.ndarray, boundary: np.ndarray, tie_tol: float):
    """Exact nearest boundary point in dimension 1 (the boundary is a finite sorted set)."""
    line = boundary[:, 0]
    x = pts[:, 0]
    right = np.clip(np.searchsorted(line, x), 0, line.size - 1)
    left = np.clip(right - 1, 0, line.size - 1)
    d_left, d_right = np.abs(x - line[left]), np.abs(x - line[right])
    take_left = d_left <= d_right
    values = np.where(take_left, d_left, d_right)
    projections = np.where(take_left, line[left], line[right])[:, None]
    tied = (np.abs(d_left - d_right) <= tie_tol) & (np.abs(line[right] - line[left]) > tie_tol)
    return values, np.zeros_like(values), projections, ~tied


def _nearest_on_arcs(pts: np.ndarray, m: BallComplementRegion):
    """Exact nearest boundary point in dimension 2 using the arc decomposition of the boundary."""
    arcs = boundary_arcs_2d(m)
    tie_tol = m.tie_tol
    count = pts.shape[0]
    values = np.empty(count)
    projections = np.empty((count, 2))
    unique = np.ones(count, dtype=bool)

    start_points = arcs.points_at(np.arange(len(arcs)), arcs.starts)
    end_points = arcs.points_at(np.arange(len(arcs)), arcs.starts + arcs.spans)
    size = max(1, 1_000_000 // max(1, len(arcs)))
    for begin in range(0, count, size):
        block = pts[begin : begin + size]
        rel = block[:, None, :] - arcs.centers[None]
        rho = np.linalg.norm(rel, axis=2)
        phi = np.arctan2(rel[..., 1], rel[..., 0])
        inside = np.mod(phi - arcs.starts[None], TWO_PI) <= arcs.spans[None]
        degenerate = rho <= 1e-12 * arcs.radii[None]

        radial_dist = np.abs(rho - arcs.radii[None])
        safe_rho = np.where(degenerate, 1.0, rho)
        radial_proj = arcs.centers[None] + arcs.radii[None, :, None] * rel / safe_rho[..., None]

        d_start = np.linalg.norm(block[:, None, :] - start_points[None], axis=2)
        d_end = np.linalg.norm(block[:, None, :] - end_points[None], axis=2)
        end_proj = np.where((d_start <= d_end)[..., None], start_points[None], end_points[None])
        end_dist = np.minimum(d_start, d_end)

        use_radial = inside & ~degenerate
        dist = np.where(use_radial, radial_dist, end_dist)
        proj = np.where(use_radial[..., None], radial_proj, end_proj)
        dist = np.where(degenerate, arcs.radii[None], dist)

        rows = np.arange(block.shape[0])
        best = np.argmin(dist, axis=1)
        best_dist = dist[rows, best]
        best_proj = proj[rows, best]

        near_best = dist <= best_dist[:, None] + tie_tol
        spread = np.linalg.norm(proj - best_proj[:, None, :], axis=2) > tie_tol
        tied = np.any(near_best & spread, axis=1)
        # a point at a circle center is equidistant from the whole arc
        tied |= np.any(near_best & degenerate & (arcs.lengths[None] > tie_tol), axis=1)

        values[begin : begin + size] = best_dist
        projections[begin : begin + size] = best_proj
        unique[begin : begin + size] = ~tied
    return values, np.zeros(count), projections, unique


def _nearest_sampled(pts: np.ndarray, m: BallComplementRegion, mesh: float):
    """Radial candidate of the deepest ball when it lies in M, otherwise bracket with the surface net."""
    n = m.dimension
    tie_tol = m.tie_tol
    depth = m.radii[None, :] - np.linalg.norm(pts[:, None, :] - m.centers[None], axis=2)
    order = np.argsort(-depth, axis=1, kind="stable")
    lower = depth[np.arange(pts.shape[0]), order[:, 0]]

    candidates = []
    for rank in range(min(2, m.radii.size)):
        ball = order[:, rank]
        rel = pts - m.centers[ball]
        norm = np.linalg.norm(rel, axis=1)
        direction = np.divide(rel, norm[:, None], out=np.zeros_like(rel), where=norm[:, None] > 0)
        candidates.append(m.centers[ball] + m.radii[ball][:, None] * direction)
        for axis in range(n):
            for sign in (-1.0, 1.0):
                axis_direction = np.zeros(n)
                axis_direction[axis] = sign
                candidate = m.centers[ball] + m.radii[ball][:, None] * axis_direction
                candidates.append(np.where((norm > 0)[:, None], np.nan, candidate))

    net = surface_net(m, mesh)
    tree = _net_tree(m, net)
    k = min(_NET_NEIGHBOURS, len(net))
    net_dist, net_index = tree.query(pts, k=k)
    net_dist = np.asarray(net_dist).reshape(pts.shape[0], -1)
    net_index = np.asarray(net_index).reshape(pts.shape[0], -1)
    for column in range(net_index.shape[1]):
        candidates.append(net.points[net_index[:, column]])
    if m.anchors is not None and m.anchors.shape[0]:
        _, anchor_index = cKDTree(m.anchors).query(pts)
        candidates.append(m.anchors[np.asarray(anchor_index)])

    stacked = np.stack(candidates, axis=1)
    valid = ~np.any(np.isnan(stacked), axis=2)
    flat = np.nan_to_num(stacked).reshape(-1, n)
    valid &= m.contains(flat).reshape(valid.shape)
    dist = np.linalg.norm(stacked - pts[:, None, :], axis=2)
    dist[~valid] = np.inf

    rows = np.arange(pts.shape[0])
    best = np.argmin(dist, axis=1)
    values = dist[rows, best]
    projections = stacked[rows, best]
    bracket = np.maximum(lower, net_dist[:, 0] - net.covering_radius)
    errors = np.where(values <= lower + tie_tol, 0.0, np.clip(values - bracket, 0.0, None))

    near_best = dist <= values[:, None] + tie_tol
    spread = np.linalg.norm(np.nan_to_num(stacked) - projections[:, None, :], axis=2) > tie_tol
    unique = ~np.any(near_best & spread, axis=1)
    return values, errors, projections, unique


def _net_tree(m: BallComplementRegion, net) -> cKDTree:
    key = ("tree", net.mesh)
    if key not in m._cache:  # pylint: disable=protected-access
        m._cache[key] = cKDTree(net.points)  # pylint: disable=protected-access
    return m._cache[key]  # pylint: disable=protected-access


def _point_set(points, dimension: int | None) -> np.ndarray:
    if isinstance(points, PointConfig):
        return points.points
    array = np.asarray(points, dtype=float)
    if array.ndim <= 1:
        return array.reshape(-1, dimension or 1)
    return as_points(array, dimension)


def hausdorff(a, b, dimension: int | None = None) -> float:
    """Hausdorff distance between two finite point sets.

    A flat sequence is a set of scalars unless `dimension` says otherwise: `[0, 1]` is the set {0, 1} on the line.
    """
    a_points, b_points = _point_set(a, dimension), _point_set(b, dimension)
    if a_points.shape[0] == 0 or b_points.shape[0] == 0:
        raise EmptyPointSetError("hausdorff argument")
    if a_points.shape[1] != b_points.shape[1]:
        raise ValueError(f"point sets live in dimensions {a_points.shape[1]} and {b_points.shape[1]}")
    return float(max(directed_hausdorff(a_points, b_points)[0], directed_hausdorff(b_points, a_points)[0]))


def enlarge(
    e: PointConfig | BallUnion | BallComplementRegion, eps: float, mesh: float | None = None
) -> Callable[[np.ndarray], np.ndarray]:
    """Membership predicate of the open eps-enlargement {x : dist(x, E) < eps}."""
    if not eps > 0:
        raise InvalidRegionError(f"enlargement radius must be positive, got {eps!r}")
    if isinstance(e, PointConfig):
        tree = cKDTree(e.points)
        dimension = e.dimension
        return lambda points: tree.query(as_points(points, dimension))[0] < eps
    if isinstance(e, BallUnion):
        grown = BallUnion(centers=e.centers, radii=e.radii + eps)
        return grown.contains
    region_mesh = mesh if mesh is not None else 1e-3 * e.scene_diameter
    return lambda points: region_distances(points, e, region_mesh).values < eps
