"""Canonical ball-complement region of a point configuration."""

import numpy as np

from siglo.exceptions.logic.measure import InvalidMeasureError
from siglo.exceptions.logic.solver import DegenerateRadiusError
from siglo.geometry import BallComplementRegion, PointConfig, config_distances
from siglo.measure import SignedMeasure


def negative_atoms(phi: SignedMeasure) -> tuple[np.ndarray, np.ndarray]:
    """Locations and weights of the negative part, which must be a nonempty finite sum of atoms."""
    if not phi.minus.is_atomic:
        raise InvalidMeasureError("region problems need an atomic negative part; discretize it first")
    if not phi.minus.atoms:
        raise InvalidMeasureError("region problems need at least one negative atom")
    locations = np.array([atom.location for atom in phi.minus.atoms], dtype=float)
    weights = np.array([atom.weight for atom in phi.minus.atoms], dtype=float)
    return locations, weights


def canonicalize(sigma: PointConfig, phi: SignedMeasure) -> BallComplementRegion:
    """Complement of the union over negative atoms y of the open balls of radius dist(y, sigma) around y.

    sigma is kept as anchors of the region: it lies in M and realizes dist(y, M) for every center.
    """
    centers, _ = negative_atoms(phi)
    radii, _ = config_distances(centers, sigma)
    degenerate = np.flatnonzero(radii <= 0)
    if degenerate.size:
        raise DegenerateRadiusError(centers[degenerate[0]].tolist())
    return BallComplementRegion(centers=centers, radii=radii, anchors=sigma.points)
