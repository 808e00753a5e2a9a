"""Optimality diagnostics of ball-complement regions: first variation, balanced projections, mass and separation."""

import math
from collections.abc import Callable, Sequence

import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull, QhullError, cKDTree

from siglo.geometry import BallComplementRegion, enlarge, region_distances
from siglo.geometry.types import set_diameter
from siglo.measure import MeasureComponent, QuadratureNodes, SignedMeasure, discretize, total_mass, w1_distance

from .types import BalancedProjection, OptimalityReport, SeparationCondition

VectorField = Callable[[np.ndarray], np.ndarray]

_HULL_DIAMETER_THRESHOLD = 2000


def radial_field(center, radius: float | None = None, tol: float = 1e-9) -> VectorField:
    """Unit field pointing away from `center`; with `radius` it vanishes off that sphere (relative tolerance tol).

    Flowing a ball boundary along it grows the radius, so the first variation is dF/dr.
    """
    center = np.asarray(center, dtype=float).reshape(-1)

    def field(points: np.ndarray) -> np.ndarray:
        offsets = points - center
        norms = np.linalg.norm(offsets, axis=1)
        values = np.divide(offsets, norms[:, None], out=np.zeros_like(offsets), where=norms[:, None] > 0)
        if radius is not None:
            values[np.abs(norms - radius) > tol * max(radius, 1.0)] = 0.0
        return values

    return field


def constant_field(vector) -> VectorField:
    vector = np.asarray(vector, dtype=float).reshape(-1)
    return lambda points: np.broadcast_to(vector, points.shape)


def _outside_nodes(m: BallComplementRegion, nodes: QuadratureNodes) -> tuple[np.ndarray, np.ndarray]:
    outside = ~m.contains(nodes.points) if len(nodes) else np.zeros(0, dtype=bool)
    return nodes.points[outside], nodes.weights[outside]


def first_variation(
    m: BallComplementRegion, phi: SignedMeasure, field: VectorField, mesh: float
) -> tuple[float, float]:
    """Sum over nodes x outside M of w(x) <X(p), (p - x)/|p - x|> with p the projection of x onto M.

    Nodes with several nearest points of M are left out; their total absolute weight is returned as the dropped
    ridge mass.
    """
    points, weights = _outside_nodes(m, phi.signed_nodes)
    if points.shape[0] == 0:
        return 0.0, 0.0
    distances = region_distances(points, m, mesh)
    ridge = ~distances.unique
    dropped = math.fsum(np.abs(weights[ridge]))

    keep = ~ridge
    projections = distances.projections[keep]
    offsets = projections - points[keep]
    norms = np.linalg.norm(offsets, axis=1)
    directions = np.divide(offsets, norms[:, None], out=np.zeros_like(offsets), where=norms[:, None] > 0)
    values = np.einsum("ij,ij->i", np.asarray(field(projections), dtype=float), directions)
    return math.fsum(weights[keep] * values), dropped


def _pushforward(points: np.ndarray, weights: np.ndarray, m: BallComplementRegion, mesh: float):
    """Projected nodes merged on the mesh grid; returns (points, weights, ridge mass)."""
    if points.shape[0] == 0:
        return np.zeros((0, m.dimension)), np.zeros(0), 0.0
    distances = region_distances(points, m, mesh)
    ridge = math.fsum(weights[~distances.unique])
    merged = discretize(MeasureComponent.from_arrays(distances.projections, weights), mesh)
    return (
        np.array([atom.location for atom in merged], dtype=float).reshape(-1, m.dimension),
        np.array([atom.weight for atom in merged], dtype=float),
        ridge,
    )


def balanced_projection_residual(m: BallComplementRegion, phi: SignedMeasure, mesh: float) -> BalancedProjection:
    """W1 distance between the projections onto M of phi+ and of phi- restricted to the complement of M.

    The lighter pushforward is padded with the mass difference at its own barycenter (at the heavier one's when it
    is empty) before transport.
    """
    plus_points, plus_weights = _outside_nodes(m, phi.plus.nodes)
    minus_points, minus_weights = _outside_nodes(m, phi.minus.nodes)
    plus_proj, plus_w, plus_ridge = _pushforward(plus_points, plus_weights, m, mesh)
    minus_proj, minus_w, minus_ridge = _pushforward(minus_points, minus_weights, m, mesh)

    plus_mass, minus_mass = math.fsum(plus_w), math.fsum(minus_w)
    gap = plus_mass - minus_mass
    if gap > 0:
        minus_proj, minus_w = _pad(minus_proj, minus_w, plus_proj, plus_w, gap)
    elif gap < 0:
        plus_proj, plus_w = _pad(plus_proj, plus_w, minus_proj, minus_w, -gap)

    residual = 0.0
    if plus_w.size and minus_w.size:
        residual = w1_distance(QuadratureNodes(plus_proj, plus_w), QuadratureNodes(minus_proj, minus_w))
    return BalancedProjection(
        residual=residual,
        pushforward_mass_gap=gap,
        mass_gap=mass_check(m, phi),
        dropped_ridge_mass=plus_ridge + minus_ridge,
    )


def _pad(points, weights, other_points, other_weights, amount):
    source_points, source_weights = (points, weights) if weights.size else (other_points, other_weights)
    barycenter = np.average(source_points, axis=0, weights=source_weights)
    return np.vstack([points, barycenter[None]]), np.append(weights, amount)


def positive_mass_in(m: BallComplementRegion, phi: SignedMeasure) -> float:
    nodes = phi.plus.nodes
    if len(nodes) == 0:
        return 0.0
    return math.fsum(nodes.weights[m.contains(nodes.points)])


def mass_check(m: BallComplementRegion, phi: SignedMeasure) -> float:
    """phi+(M) - (m+ - m-); a region claimed optimal has this at least minus the quadrature tolerance."""
    return positive_mass_in(m, phi) - (total_mass(phi.plus) - total_mass(phi.minus))


def enlarged_mass(m: BallComplementRegion, phi: SignedMeasure, eps: float, mesh: float) -> float:
    """phi+ of the open eps-enlargement of M."""
    nodes = phi.plus.nodes
    if len(nodes) == 0:
        return 0.0
    inside = enlarge(m, eps, mesh)(nodes.points)
    return math.fsum(nodes.weights[inside])


def _hulls_disjoint(plus: np.ndarray, minus: np.ndarray) -> bool:
    """Strict linear separation: a.p - b >= 1 on plus and a.q - b <= -1 on minus is feasible."""
    dimension = plus.shape[1]
    a_ub = np.vstack(
        [
            np.hstack([-plus, np.ones((plus.shape[0], 1))]),
            np.hstack([minus, -np.ones((minus.shape[0], 1))]),
        ]
    )
    b_ub = -np.ones(a_ub.shape[0])
    result = linprog(np.zeros(dimension + 1), A_ub=a_ub, b_ub=b_ub, bounds=(None, None), method="highs")
    return result.status == 0


def support_diameter(points: np.ndarray) -> float:
    """Diameter of a node set; large sets use their convex hull vertices (bounding box diagonal if degenerate)."""
    if points.shape[1] == 1 or points.shape[0] <= _HULL_DIAMETER_THRESHOLD:
        return set_diameter(points)
    try:
        vertices = points[ConvexHull(points).vertices]
    except QhullError:
        return float(np.linalg.norm(points.max(axis=0) - points.min(axis=0)))
    return set_diameter(vertices)


def separation_check(phi: SignedMeasure) -> SeparationCondition:
    """First of the two sufficient conditions for M to avoid supp phi- that holds on the quadrature supports."""
    plus, minus = phi.plus.nodes.points, phi.minus.nodes.points
    if plus.shape[0] == 0 or minus.shape[0] == 0:
        return SeparationCondition.HULLS_DISJOINT
    if _hulls_disjoint(plus, minus):
        return SeparationCondition.HULLS_DISJOINT
    distance = float(np.min(cKDTree(minus).query(plus)[0]))
    if distance > support_diameter(plus):
        return SeparationCondition.DISTANCE_EXCEEDS_DIAMETER
    return SeparationCondition.NONE


def optimality_report(
    m: BallComplementRegion, phi: SignedMeasure, fields: Sequence[VectorField], mesh: float
) -> OptimalityReport:
    """Every diagnostic of a candidate region in one report."""
    variations = [first_variation(m, phi, field, mesh) for field in fields]
    balanced = balanced_projection_residual(m, phi, mesh)
    return OptimalityReport(
        first_variation_values=[value for value, _ in variations],
        balanced_projection_residual=balanced.residual,
        pushforward_mass_gap=balanced.pushforward_mass_gap,
        mass_gap=balanced.mass_gap,
        dropped_ridge_mass=max([balanced.dropped_ridge_mass] + [dropped for _, dropped in variations]),
    )
