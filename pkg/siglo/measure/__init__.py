"""Signed measures: representation, quadrature, discretization and transport distances."""

from .quadrature import ball_mass, bounding_ball, discretize, quadrature_nodes, total_mass
from .transport import w1_distance
from .types import Atom, GriddedDensity, MeasureComponent, QuadratureNodes, SignedMeasure

__all__ = [
    "Atom",
    "GriddedDensity",
    "MeasureComponent",
    "QuadratureNodes",
    "SignedMeasure",
    "ball_mass",
    "bounding_ball",
    "discretize",
    "quadrature_nodes",
    "total_mass",
    "w1_distance",
]
