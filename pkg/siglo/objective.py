"""Signed average-distance functional on point configurations and ball-complement regions."""

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from siglo.exceptions.logic.solver import EmptyEssentialPartError
from siglo.geometry import BallComplementRegion, PointConfig, region_distances
from siglo.geometry.types import set_diameter
from siglo.measure import QuadratureNodes, SignedMeasure


@dataclass(frozen=True)
class ObjectiveValue:
    """Value of F with the quadrature grid step used and, for regions, the accumulated distance error bound.

    `plus_part` and `minus_part` are the two integrals, `value = plus_part - minus_part`.
    """

    value: float
    quadrature_step: float
    distance_error_bound: float = 0.0
    plus_part: float = 0.0
    minus_part: float = 0.0


def signed_average_distance(points: np.ndarray, nodes: QuadratureNodes) -> tuple[float, float]:
    """Return (integral against positive weights, integral against the absolute value of negative weights)."""
    if len(nodes) == 0:
        return 0.0, 0.0
    distances, _ = cKDTree(points).query(nodes.points)
    weighted = nodes.weights * distances
    positive = nodes.weights > 0
    return math.fsum(weighted[positive]), -math.fsum(weighted[~positive])


def eval_F(sigma: PointConfig, phi: SignedMeasure) -> ObjectiveValue:
    """F(sigma) = integral of dist(x, sigma) against phi+ minus the same against phi-."""
    plus_part, minus_part = signed_average_distance(sigma.points, phi.signed_nodes)
    return ObjectiveValue(
        value=plus_part - minus_part,
        quadrature_step=phi.quadrature_step,
        plus_part=plus_part,
        minus_part=minus_part,
    )


def eval_F_region(m: BallComplementRegion, phi: SignedMeasure, mesh: float) -> ObjectiveValue:
    """F(M) with distances to the region; negative-part atoms at a ball center get the radius exactly."""
    nodes = phi.signed_nodes
    if len(nodes) == 0:
        return ObjectiveValue(value=0.0, quadrature_step=phi.quadrature_step)
    result = region_distances(nodes.points, m, mesh)
    values, errors = result.values.copy(), result.error_bounds.copy()

    negative = nodes.weights < 0
    if np.any(negative):
        offsets, ball = cKDTree(m.centers).query(nodes.points)
        at_center = negative & (np.asarray(offsets) == 0)
        radius = m.radii[np.asarray(ball)]
        attained = at_center & (np.abs(values - radius) <= errors + m.tie_tol)
        values[attained] = radius[attained]
        errors[attained] = 0.0

    weighted = nodes.weights * values
    positive = ~negative
    plus_part = math.fsum(weighted[positive])
    minus_part = -math.fsum(weighted[negative])
    return ObjectiveValue(
        value=plus_part - minus_part,
        quadrature_step=phi.quadrature_step,
        distance_error_bound=math.fsum(np.abs(nodes.weights) * errors),
        plus_part=plus_part,
        minus_part=minus_part,
    )


def default_tolerance(sigma: PointConfig, phi: SignedMeasure) -> float:
    """1e-9 times the diameter of the scene made of sigma and the quadrature nodes of phi."""
    points = np.vstack([sigma.points, phi.signed_nodes.points])
    lower, upper = points.min(axis=0), points.max(axis=0)
    return 1e-9 * max(float(np.linalg.norm(upper - lower)), set_diameter(sigma.points), 1e-300)


def essential_part(sigma: PointConfig, phi: SignedMeasure, tol: float | None = None) -> PointConfig:
    """Points of sigma realizing the distance (within tol) of at least one quadrature node of phi.

    Tied realizers are all kept. Duplicated points are kept once.
    """
    nodes = phi.signed_nodes
    if len(nodes) == 0:
        raise EmptyEssentialPartError()
    tol = default_tolerance(sigma, phi) if tol is None else tol
    points = sigma.distinct()

    keep = np.zeros(points.shape[0], dtype=bool)
    size = max(1, 2_000_000 // points.shape[0])
    for start in range(0, len(nodes), size):
        block = nodes.points[start : start + size]
        distances = np.linalg.norm(block[:, None, :] - points[None], axis=2)
        nearest = distances.min(axis=1, keepdims=True)
        keep |= np.any(distances <= nearest + tol, axis=0)
    return PointConfig(points[keep])


def rescaled_gap(k: int, F_sigma: float, F_ref: float, n: int) -> float:  # pylint: disable=invalid-name
    """k^(1/n) * (F_sigma - F_ref)."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    return k ** (1 / n) * (F_sigma - F_ref)
