"""Mass, quadrature and grid discretization of measure components are defined here.

Iteration order is fixed everywhere: atoms first, then densities in order, cells in row-major order.
"""

import math

import numpy as np

from siglo.exceptions.logic.measure import EmptyMeasureError, InvalidMeasureError

from .types import Atom, MeasureComponent, QuadratureNodes, SignedMeasure


def total_mass(component: MeasureComponent) -> float:
    """Sum of atom weights plus the midpoint-rule mass of every density."""
    return math.fsum([a.weight for a in component.atoms] + [d.mass() for d in component.densities])


def quadrature_nodes(component: MeasureComponent) -> QuadratureNodes:
    """Atoms verbatim, then one node per density cell of positive value at the cell midpoint.

    Cells of zero value carry no mass and produce no node.
    """
    dimension = component.dimension or 1
    points = [np.array([a.location for a in component.atoms], dtype=float).reshape(-1, dimension)]
    weights = [np.array([a.weight for a in component.atoms], dtype=float)]
    for density in component.densities:
        values = density.values.ravel()
        positive = values > 0
        points.append(density.midpoints()[positive])
        weights.append(values[positive] * density.cell_volume)
    return QuadratureNodes(points=np.vstack(points), weights=np.concatenate(weights))


def discretize(component: MeasureComponent, step: float) -> list[Atom]:
    """Collapse the component onto the origin-anchored cubic grid of side `step`.

    Each grid cell with positive mass yields one atom at the mass-weighted centroid of its nodes (clamped to
    the cell). Cell masses are fsum-ed in row-major cell order and the heaviest atom closes the total, so
    `total_mass` of the result equals `total_mass(component)` bit for bit.
    """
    if not step > 0:
        raise InvalidMeasureError(f"discretization step must be positive, got {step!r}")
    nodes = component.nodes
    if len(nodes) == 0:
        return []

    cells = np.floor(nodes.points / step).astype(np.int64)
    unique_cells, inverse = np.unique(cells, axis=0, return_inverse=True)
    inverse = inverse.ravel()
    count = unique_cells.shape[0]

    order = np.argsort(inverse, kind="stable")
    bounds = np.cumsum(np.bincount(inverse, minlength=count))[:-1]
    weights = np.array([math.fsum(chunk) for chunk in np.split(nodes.weights[order], bounds)])
    centroids = np.empty((count, nodes.points.shape[1]))
    for axis in range(nodes.points.shape[1]):
        centroids[:, axis] = np.bincount(inverse, weights=nodes.weights * nodes.points[:, axis], minlength=count)
    centroids /= weights[:, None]
    centroids = np.clip(centroids, unique_cells * step, (unique_cells + 1) * step)

    target = total_mass(component)
    heaviest = int(np.argmax(weights))
    others = np.delete(weights, heaviest)
    weights[heaviest] = _closing_weight(target, others)

    return [Atom(tuple(c), float(w)) for c, w in zip(centroids, weights)]


def _closing_weight(target: float, others: np.ndarray) -> float:
    """Weight w with fsum(others + [w]) == target bit for bit.

    The start is the correctly rounded target - sum(others). Moving w by one ulp moves the exact sum by at most one
    ulp of the target (w <= target for positive weights), so the walk reaches the target.
    """
    weight = math.fsum(np.concatenate(([target], -others)))
    for _ in range(64):
        total = math.fsum(np.append(others, weight))
        if total == target:
            return weight
        weight = float(np.nextafter(weight, math.inf if total < target else -math.inf))
    raise InvalidMeasureError(f"could not close the discretized mass on {target!r}")


def bounding_ball(measure: SignedMeasure) -> tuple[np.ndarray, float]:
    """Closed ball containing every atom and every density cell of positive value of both parts."""
    boxes = [box for box in (measure.plus.support_box(), measure.minus.support_box()) if box is not None]
    if not boxes:
        raise EmptyMeasureError("bounding_ball")
    lower = np.min([b[0] for b in boxes], axis=0)
    upper = np.max([b[1] for b in boxes], axis=0)
    center = (lower + upper) / 2

    radius = 0.0
    for component in (measure.plus, measure.minus):
        if component.atoms:
            locations = np.array([a.location for a in component.atoms])
            radius = max(radius, float(np.max(np.linalg.norm(locations - center, axis=1))))
        for density in component.densities:
            box = density.positive_box()
            if box is not None:
                farthest = np.maximum(np.abs(box[0] - center), np.abs(box[1] - center))
                radius = max(radius, float(np.linalg.norm(farthest)))
    return center, radius


def ball_mass(component: MeasureComponent, center: np.ndarray, radius: float) -> float:
    """Quadrature mass of the open ball B_radius(center)."""
    nodes = component.nodes
    if len(nodes) == 0:
        return 0.0
    inside = np.linalg.norm(nodes.points - np.asarray(center, dtype=float), axis=1) < radius
    return math.fsum(nodes.weights[inside])
