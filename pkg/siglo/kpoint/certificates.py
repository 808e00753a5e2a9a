"""Boundedness certificate and the nonexistence probe for the k-point problem are defined here."""

from collections.abc import Sequence

import numpy as np

from siglo.exceptions.logic.solver import ExistenceHypothesisError
from siglo.geometry import PointConfig
from siglo.measure import MeasureComponent, SignedMeasure, bounding_ball, total_mass
from siglo.objective import eval_F

from .types import NonexistenceProbe


def masses(phi: SignedMeasure) -> tuple[float, float]:
    return total_mass(phi.plus), total_mass(phi.minus)


def check_existence_hypothesis(phi: SignedMeasure) -> tuple[float, float]:
    """Return (m+, m-) or raise when m+ <= m-."""
    mass_plus, mass_minus = masses(phi)
    if not mass_plus > mass_minus:
        raise ExistenceHypothesisError(mass_plus, mass_minus)
    return mass_plus, mass_minus


def boundedness_certificate(phi: SignedMeasure, F_bound: float) -> float:  # pylint: disable=invalid-name
    """Radius R_out = (F_bound + R (m+ + m-)) / (m+ - m-) around the bounding ball center of phi.

    Any configuration whose essential part has F <= F_bound has a point within R_out of that center.
    """
    mass_plus, mass_minus = check_existence_hypothesis(phi)
    _, radius = bounding_ball(phi)
    return (F_bound + radius * (mass_plus + mass_minus)) / (mass_plus - mass_minus)


def circle_measure(circle_nodes: int) -> SignedMeasure:
    """Uniform unit mass on the unit circle (equal atoms) minus a unit atom at the origin."""
    angles = 2 * np.pi * np.arange(circle_nodes) / circle_nodes
    circle = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    return SignedMeasure(
        plus=MeasureComponent.from_arrays(circle, np.full(circle_nodes, 1.0 / circle_nodes)),
        minus=MeasureComponent.from_arrays(np.zeros((1, 2)), [1.0]),
        dimension=2,
    )


def nonexistence_probe(radii: Sequence[float], circle_nodes: int) -> NonexistenceProbe:
    """Evaluate f(r) = F({(r, 0)}) on the circle-minus-center measure for every radius."""
    if circle_nodes < 8:
        raise ValueError(f"circle_nodes must be at least 8, got {circle_nodes}")
    phi = circle_measure(circle_nodes)
    rows = [(float(r), eval_F(PointConfig(np.array([[r, 0.0]])), phi).value) for r in radii]
    values = [value for _, value in rows]
    strictly_decreasing = all(b < a for a, b in zip(values, values[1:]))
    return NonexistenceProbe(rows=rows, strictly_decreasing=strictly_decreasing)
