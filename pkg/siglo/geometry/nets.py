"""Boundary decompositions and finite nets of ball-complement regions are defined here.

Surface nets are exact in dimension 1 (the boundary is finite), built from the exact arc decomposition of the
boundary in dimension 2, and from binned sphere samples in higher dimension. Volume nets use the cubic grid of
step delta/sqrt(n) and keep, per cell, the point of the boundary shell closest to the cell midpoint among a fixed
candidate set. A cell where no candidate lands in the shell gets the nearest shell point to its midpoint instead.
"""

import math
from dataclasses import dataclass

import numpy as np
import structlog
from scipy.special import gamma

from siglo.exceptions.logic.geometry import InvalidRegionError

from .types import BallComplementRegion, Net

TWO_PI = 2 * math.pi
_ARC_MIN_SPAN = 1e-12
_SPHERE_SAMPLE_FACTOR = 8
_SURFACE_BIN_FACTOR = 0.75
_PROBE_FRACTIONS = (0.25, 0.5, 0.75, 0.95)
_SHELL_LEVEL_SLACK = 1e-9

logger = structlog.get_logger(__name__)


def unit_ball_volume(n: int) -> float:
    """Volume of the unit ball of R^n."""
    return float(math.pi ** (n / 2) / gamma(n / 2 + 1))


def perimeter_bound(m: BallComplementRegion) -> float:
    """Upper bound n*w_n*(diam K + R')^n / R on the (n-1)-measure of the boundary of M."""
    n = m.dimension
    return n * unit_ball_volume(n) * (m.centers_diameter + m.max_radius) ** n / m.min_radius


@dataclass(frozen=True)
class Arcs:
    """Counter-clockwise circle arcs from `starts` spanning `spans` radians, one row per arc."""

    centers: np.ndarray
    radii: np.ndarray
    starts: np.ndarray
    spans: np.ndarray

    def __len__(self) -> int:
        return int(self.radii.size)

    @property
    def lengths(self) -> np.ndarray:
        return self.radii * self.spans

    def points_at(self, arc_index: np.ndarray, angles: np.ndarray) -> np.ndarray:
        radii = self.radii[arc_index][:, None]
        return self.centers[arc_index] + radii * np.stack([np.cos(angles), np.sin(angles)], axis=1)


def boundary_points_1d(m: BallComplementRegion) -> np.ndarray:
    """Sorted endpoints of the union of intervals that no other interval covers, shape (B, 1)."""
    if "points_1d" not in m._cache:  # pylint: disable=protected-access
        candidates = np.concatenate([m.centers[:, 0] - m.radii, m.centers[:, 0] + m.radii])[:, None]
        kept = candidates[~np.any(m.covered_by(candidates), axis=1)]
        m._cache["points_1d"] = np.unique(kept, axis=0)  # pylint: disable=protected-access
    return m._cache["points_1d"]  # pylint: disable=protected-access


def boundary_arcs_2d(m: BallComplementRegion) -> Arcs:
    """Exact decomposition of the boundary of a union of disks into uncovered circle arcs."""
    if "arcs" in m._cache:  # pylint: disable=protected-access
        return m._cache["arcs"]  # pylint: disable=protected-access

    centers, radii, starts, spans = [], [], [], []
    for i, (center, radius) in enumerate(zip(m.centers, m.radii)):
        covered = _covered_angles(m, i)
        if covered is None:
            continue
        for start, span in _complement_on_circle(covered):
            centers.append(center)
            radii.append(radius)
            starts.append(start)
            spans.append(span)

    arcs = Arcs(
        centers=np.array(centers, dtype=float).reshape(-1, 2),
        radii=np.array(radii, dtype=float),
        starts=np.array(starts, dtype=float),
        spans=np.array(spans, dtype=float),
    )
    m._cache["arcs"] = arcs  # pylint: disable=protected-access
    return arcs


def _covered_angles(m: BallComplementRegion, i: int) -> list[tuple[float, float]] | None:
    """Angular intervals of circle i lying in other open disks, or None when the whole circle is covered."""
    center, radius = m.centers[i], m.radii[i]
    intervals = []
    for j, (other, other_radius) in enumerate(zip(m.centers, m.radii)):
        if j == i:
            continue
        offset = other - center
        d = float(np.hypot(offset[0], offset[1]))
        if d == 0 and other_radius == radius:
            # identical circles: keep the first copy only
            if j < i:
                return None
            continue
        if d + radius < other_radius:
            return None
        if d >= radius + other_radius or d + other_radius <= radius:
            continue
        alpha = math.atan2(offset[1], offset[0])
        beta = math.acos(min(1.0, max(-1.0, (radius**2 + d**2 - other_radius**2) / (2 * radius * d))))
        intervals.append((alpha - beta, alpha + beta))
    return intervals


def _complement_on_circle(covered: list[tuple[float, float]]) -> list[tuple[float, float]]:
    """Uncovered (start, span) pieces of the circle given covered angular intervals."""
    if not covered:
        return [(0.0, TWO_PI)]
    segments = []
    for a, b in covered:
        width = b - a
        if width >= TWO_PI:
            return []
        a0 = a % TWO_PI
        if a0 + width <= TWO_PI:
            segments.append((a0, a0 + width))
        else:
            segments.append((a0, TWO_PI))
            segments.append((0.0, a0 + width - TWO_PI))
    segments.sort()

    merged: list[list[float]] = []
    for a, b in segments:
        if merged and a <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], b)
        else:
            merged.append([a, b])

    gaps = [(left[1], right[0] - left[1]) for left, right in zip(merged, merged[1:])]
    gaps.append((merged[-1][1], merged[0][0] + TWO_PI - merged[-1][1]))
    return [(start % TWO_PI, span) for start, span in gaps if span > _ARC_MIN_SPAN]


def surface_net(m: BallComplementRegion, delta: float) -> Net:
    """Net of the boundary of M: every boundary point lies within `delta` of a net point."""
    if not delta > 0:
        raise InvalidRegionError(f"net mesh must be positive, got {delta!r}")
    key = ("surface", float(delta))
    if key in m._cache:  # pylint: disable=protected-access
        return m._cache[key]  # pylint: disable=protected-access

    n = m.dimension
    if n == 1:
        points = boundary_points_1d(m)
        net = Net(points=points, mesh=delta, kind="surface", cardinality_bound=perimeter_bound(m), covering_radius=0.0)
    elif n == 2:
        net = _arc_surface_net(m, delta)
    else:
        net = _sampled_surface_net(m, delta)

    m._cache[key] = net  # pylint: disable=protected-access
    return net


def _arc_surface_net(m: BallComplementRegion, delta: float) -> Net:
    arcs = boundary_arcs_2d(m)
    if len(arcs) == 0:
        return Net(points=np.empty((0, 2)), mesh=delta, kind="surface", cardinality_bound=0.0, covering_radius=0.0)
    counts = np.maximum(1, np.floor(arcs.lengths / delta)).astype(np.int64)
    arc_index = np.repeat(np.arange(len(arcs)), counts)
    position = np.arange(arc_index.size) - np.repeat(np.cumsum(counts) - counts, counts)
    angles = arcs.starts[arc_index] + (position + 0.5) * arcs.spans[arc_index] / counts[arc_index]
    points = arcs.points_at(arc_index, angles)
    covering = float(np.max(arcs.lengths / (2 * counts)))
    # one point per arc on top of the perimeter term covers arcs shorter than delta
    bound = perimeter_bound(m) / delta + len(arcs)
    return Net(points=points, mesh=delta, kind="surface", cardinality_bound=bound, covering_radius=covering)


def _sphere_directions(n: int, count: int) -> np.ndarray:
    if n == 3:
        i = np.arange(count) + 0.5
        z = 1 - 2 * i / count
        rho = np.sqrt(np.clip(1 - z**2, 0, None))
        theta = math.pi * (1 + math.sqrt(5)) * i
        return np.stack([rho * np.cos(theta), rho * np.sin(theta), z], axis=1)
    directions = np.random.default_rng(count).standard_normal((count, n))
    return directions / np.linalg.norm(directions, axis=1, keepdims=True)


def _sampled_surface_net(m: BallComplementRegion, delta: float) -> Net:
    n = m.dimension
    spacing = delta / _SPHERE_SAMPLE_FACTOR
    sphere_area = n * unit_ball_volume(n)
    samples = []
    for center, radius in zip(m.centers, m.radii):
        count = max(2 * n, math.ceil(sphere_area * radius ** (n - 1) / spacing ** (n - 1)))
        points = center + radius * _sphere_directions(n, count)
        samples.append(points[m.contains(points)])
    points = np.vstack(samples)

    cell = _SURFACE_BIN_FACTOR * delta / math.sqrt(n)
    points = _closest_per_cell(points, cell)
    bound = _tube_cell_bound(m, inner=cell * math.sqrt(n), outer=cell * math.sqrt(n), cell=cell)
    return Net(points=points, mesh=delta, kind="surface", cardinality_bound=bound, covering_radius=delta)


def _closest_per_cell(points: np.ndarray, cell: float) -> np.ndarray:
    """Per grid cell, the point closest to the cell midpoint; output in lexicographic cell order."""
    if points.shape[0] == 0:
        return points
    index = np.floor(points / cell).astype(np.int64)
    to_mid = np.linalg.norm(points - (index + 0.5) * cell, axis=1)
    order = np.lexsort((to_mid,) + tuple(index[:, k] for k in reversed(range(index.shape[1]))))
    index, points = index[order], points[order]
    first = np.ones(points.shape[0], dtype=bool)
    first[1:] = np.any(index[1:] != index[:-1], axis=1)
    return points[first]


def _tube_cell_bound(m: BallComplementRegion, inner: float, outer: float, cell: float) -> float:
    """Number of disjoint cubes of side `cell` fitting in {-inner < gap < outer} (volume argument)."""
    n = m.dimension
    big = m.centers_diameter + m.max_radius + outer
    volume = unit_ball_volume(n) * big**n
    if m.min_radius > inner:
        volume = min(volume, (inner + outer) * n * unit_ball_volume(n) * big**n / (m.min_radius - inner))
    return volume / cell**n


def volume_net(m: BallComplementRegion, eps: float, delta: float) -> Net:
    """Net of the shell A_eps = {x in M : dist(x, M^c) < eps}; eps = 0 gives the surface net."""
    if eps < 0:
        raise InvalidRegionError(f"shell thickness must be nonnegative, got {eps!r}")
    if eps == 0:
        return surface_net(m, delta)
    if not delta > 0:
        raise InvalidRegionError(f"net mesh must be positive, got {delta!r}")

    n = m.dimension
    cell = delta / math.sqrt(n)
    lower = np.floor(np.min(m.centers - (m.radii + eps)[:, None], axis=0) / cell).astype(np.int64)
    upper = np.floor(np.max(m.centers + (m.radii + eps)[:, None], axis=0) / cell).astype(np.int64)
    axes = [np.arange(lo, hi + 1) for lo, hi in zip(lower, upper)]
    index = np.stack([a.ravel() for a in np.meshgrid(*axes, indexing="ij")], axis=1)

    midpoints = (index + 0.5) * cell
    near = m.gap(midpoints)
    keep = (near > -delta / 2) & (near < eps + delta / 2)
    index, midpoints = index[keep], midpoints[keep]

    representatives = []
    for start in range(0, index.shape[0], 2048):
        block = slice(start, start + 2048)
        representatives.append(_cell_representatives(m, index[block], midpoints[block], cell, eps))
    points = np.vstack(representatives) if representatives else np.empty((0, n))

    bound = _tube_cell_bound(m, inner=delta, outer=eps + delta, cell=cell)
    return Net(points=points, mesh=delta, kind="volume", cardinality_bound=bound, covering_radius=delta)


def _cell_representatives(
    m: BallComplementRegion, index: np.ndarray, midpoints: np.ndarray, cell: float, eps: float
) -> np.ndarray:
    n = m.dimension
    ticks = ((np.arange(4) + 0.5) / 4 - 0.5) * cell
    offsets = np.stack([g.ravel() for g in np.meshgrid(*([ticks] * n), indexing="ij")], axis=1)
    sub = midpoints[:, None, :] + offsets[None, :, :]
    flat = sub.reshape(-1, n)

    ball = _nearest_ball(m, flat)
    radial = flat - m.centers[ball]
    norms = np.linalg.norm(radial, axis=1, keepdims=True)
    unit = np.divide(radial, norms, out=np.zeros_like(radial), where=norms > 0)
    pushes = [m.centers[ball] + (m.radii[ball] + level)[:, None] * unit for level in (0.0, eps / 2)]

    count = midpoints.shape[0]
    candidates = np.concatenate(
        [midpoints[:, None, :], sub] + [p.reshape(count, -1, n) for p in pushes],
        axis=1,
    )
    flat = candidates.reshape(-1, n)
    lower = np.repeat(index * cell, candidates.shape[1], axis=0)
    valid = np.all((flat >= lower) & (flat <= lower + cell), axis=1)
    valid &= m.contains(flat) & (m.gap(flat) < eps)
    valid = valid.reshape(count, -1)

    to_mid = np.linalg.norm(candidates - midpoints[:, None, :], axis=2)
    to_mid[~valid] = np.inf
    best = np.argmin(to_mid, axis=1)
    chosen = candidates[np.arange(count), best]
    missing = ~np.isfinite(to_mid[np.arange(count), best])
    if np.any(missing):
        chosen[missing] = _nearest_shell_points(m, midpoints[missing], eps, cell)
    keep = m.contains(chosen) & (m.gap(chosen) < eps)
    if not np.all(keep):
        logger.debug("volume net cells without a shell point", cells=int(np.count_nonzero(~keep)))
    return chosen[keep]


def _nearest_shell_points(m: BallComplementRegion, points: np.ndarray, eps: float, cell: float) -> np.ndarray:
    """Nearest points of the closed shell to `points`, which need not stay in the points' cells.

    Beyond the shell the nearest ball is followed radially to just below level eps; inside the union of balls the
    nearest boundary point is picked among radial projections onto every sphere and the boundary vertices (exact in
    dimensions 1 and 2, up to the surface net of step `cell` above).
    """
    result = points.copy()
    gaps = m.gap(points)

    far = gaps >= eps
    if np.any(far):
        ball = _nearest_ball(m, points[far])
        level = m.radii[ball] + eps * (1 - _SHELL_LEVEL_SLACK)
        result[far] = m.centers[ball] + level[:, None] * _unit_rows(points[far] - m.centers[ball])

    inside = gaps < 0
    if np.any(inside):
        pts = points[inside]
        n = m.dimension
        radial = m.centers[None] + m.radii[None, :, None] * _unit_rows(pts[:, None, :] - m.centers[None])
        vertices = _boundary_vertices(m, cell)
        vertices = np.broadcast_to(vertices[None], (pts.shape[0],) + vertices.shape)
        candidates = np.concatenate([radial, vertices], axis=1)
        distance = np.linalg.norm(candidates - pts[:, None, :], axis=2)
        distance[~m.contains(candidates.reshape(-1, n)).reshape(distance.shape)] = np.inf
        result[inside] = candidates[np.arange(pts.shape[0]), np.argmin(distance, axis=1)]
    return result


def _unit_rows(vectors: np.ndarray) -> np.ndarray:
    """Rows scaled to unit length; zero rows become the first basis vector."""
    norms = np.linalg.norm(vectors, axis=-1, keepdims=True)
    fallback = np.zeros(vectors.shape[-1])
    fallback[0] = 1.0
    return np.where(norms > 0, vectors / np.where(norms > 0, norms, 1.0), fallback)


def _boundary_vertices(m: BallComplementRegion, cell: float) -> np.ndarray:
    """Non-smooth points of the boundary of M: interval ends in 1-D, arc ends in 2-D, a surface net above."""
    n = m.dimension
    if n == 1:
        return boundary_points_1d(m)
    if n == 2:
        arcs = boundary_arcs_2d(m)
        if len(arcs) == 0:
            return np.empty((0, 2))
        arc_index = np.arange(len(arcs))
        return np.vstack([arcs.points_at(arc_index, arcs.starts), arcs.points_at(arc_index, arcs.starts + arcs.spans)])
    return surface_net(m, cell).points


def _nearest_ball(m: BallComplementRegion, points: np.ndarray) -> np.ndarray:
    result = np.empty(points.shape[0], dtype=np.int64)
    size = max(1, 2_000_000 // m.radii.size)
    for start in range(0, points.shape[0], size):
        chunk = points[start : start + size]
        gaps = np.linalg.norm(chunk[:, None, :] - m.centers[None], axis=2) - m.radii[None, :]
        result[start : start + size] = np.argmin(gaps, axis=1)
    return result


def sample_boundary(m: BallComplementRegion, count: int, seed: int = 0) -> np.ndarray:
    """Random points of the boundary of M (uniform by length on arcs in dimension 2)."""
    rng = np.random.default_rng(seed)
    n = m.dimension
    if n == 1:
        points = boundary_points_1d(m)
        return points[rng.integers(0, points.shape[0], size=count)] if points.size else points
    if n == 2:
        arcs = boundary_arcs_2d(m)
        if len(arcs) == 0:
            return np.empty((0, 2))
        arc_index = rng.choice(len(arcs), size=count, p=arcs.lengths / arcs.lengths.sum())
        angles = arcs.starts[arc_index] + rng.random(count) * arcs.spans[arc_index]
        return arcs.points_at(arc_index, angles)

    collected, total = [], 0
    weights = m.radii ** (n - 1) / np.sum(m.radii ** (n - 1))
    for _ in range(1000):
        balls = rng.choice(m.radii.size, size=4 * count, p=weights)
        directions = rng.standard_normal((4 * count, n))
        directions /= np.linalg.norm(directions, axis=1, keepdims=True)
        points = m.centers[balls] + m.radii[balls][:, None] * directions
        points = points[m.contains(points)]
        collected.append(points)
        total += points.shape[0]
        if total >= count:
            break
    return np.vstack(collected)[:count]


def sample_shell(m: BallComplementRegion, eps: float, count: int, seed: int = 0) -> np.ndarray:
    """Uniform random points of the shell {x in M : dist(x, M^c) < eps}, by rejection from its bounding box."""
    if not eps > 0:
        raise InvalidRegionError(f"shell thickness must be positive, got {eps!r}")
    rng = np.random.default_rng(seed)
    lower = np.min(m.centers - (m.radii + eps)[:, None], axis=0)
    upper = np.max(m.centers + (m.radii + eps)[:, None], axis=0)
    collected, total = [], 0
    while total < count:
        points = rng.uniform(lower, upper, size=(4 * count, m.dimension))
        gaps = m.gap(points)
        points = points[(gaps >= 0) & (gaps < eps)]
        collected.append(points)
        total += points.shape[0]
    return np.vstack(collected)[:count]


def external_ball_violations(m: BallComplementRegion, radius: float, samples: int, tol: float | None = None) -> int:
    """Count sampled boundary points whose touching ball of the given radius reaches M away from the point.

    The touching ball at x on the sphere of ball i is centered at x + radius * (y_i - x) / r_i.
    """
    n = m.dimension
    tol = 1e-6 * m.scene_diameter if tol is None else tol
    if n == 1:
        boundary = boundary_points_1d(m)
    else:
        net = surface_net(m, m.min_radius / 4)
        boundary = net.points
    if boundary.shape[0] == 0:
        return 0
    picks = np.unique(np.linspace(0, boundary.shape[0] - 1, min(samples, boundary.shape[0])).round().astype(int))
    boundary = boundary[picks]

    owner = np.argmin(np.abs(np.linalg.norm(boundary[:, None, :] - m.centers[None], axis=2) - m.radii[None]), axis=1)
    inward = (m.centers[owner] - boundary) / m.radii[owner][:, None]
    touching = boundary + radius * inward

    if n == 1:
        directions = np.array([[-1.0], [1.0]])
    elif n == 2:
        angles = np.linspace(0, TWO_PI, 16, endpoint=False)
        directions = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    else:
        directions = _sphere_directions(n, 32)
    probes = np.concatenate(
        [touching[:, None, :] + f * radius * directions[None, :, :] for f in _PROBE_FRACTIONS], axis=1
    )
    flat = probes.reshape(-1, n)
    in_region = (m.gap(flat) > 1e-9 * m.scene_diameter).reshape(probes.shape[:2])
    far = np.linalg.norm(probes - boundary[:, None, :], axis=2) > tol
    return int(np.count_nonzero(np.any(in_region & far, axis=1)))


def external_ball_check(m: BallComplementRegion, radius: float, samples: int) -> bool:
    """Uniform external ball condition of the given radius: analytic test R <= min r_i, confirmed by sampling."""
    if samples < 1:
        raise InvalidRegionError(f"at least one sample is required, got {samples}")
    analytic = radius <= m.min_radius * (1 + 1e-12)
    violations = external_ball_violations(m, radius, samples)
    if analytic and violations:
        logger.warning(
            "sampled external ball check disagrees with analytic radius",
            radius=radius,
            min_radius=m.min_radius,
            violations=violations,
        )
    return analytic and violations == 0
