"""Shared fixtures of the unit tests are defined here."""

import math

import numpy as np
import pytest

from siglo.core.config import Config
from siglo.measure import Atom, GriddedDensity, MeasureComponent, SignedMeasure


def uniform_density(lower, upper, resolution, value: float = 1.0) -> GriddedDensity:
    return GriddedDensity(lower=lower, upper=upper, values=np.full(tuple(resolution), value, dtype=float))


@pytest.fixture
def fermat_weber() -> SignedMeasure:
    """2 d(1) + 6 d(8) against d(0) + 4 d(4); the best pair of grid points is {0, 8} with F = -14."""
    return SignedMeasure(
        plus=MeasureComponent(atoms=(Atom((1.0,), 2.0), Atom((8.0,), 6.0))),
        minus=MeasureComponent(atoms=(Atom((0.0,), 1.0), Atom((4.0,), 4.0))),
        dimension=1,
    )


@pytest.fixture
def line_measure() -> SignedMeasure:
    """Unit density on [-2, 2] against density 4 on [-1/4, 1/4]; optimal region (-1, 1)^c with F = -3/4."""
    return SignedMeasure(
        plus=MeasureComponent(densities=(uniform_density([-2.0], [2.0], [4000]),)),
        minus=MeasureComponent(densities=(uniform_density([-0.25], [0.25], [200], 4.0),)),
        dimension=1,
    )


@pytest.fixture
def line_with_atom() -> SignedMeasure:
    """Unit density on [-2, 2] against a unit atom at 0; the stationary radius is 1/2."""
    return SignedMeasure(
        plus=MeasureComponent(densities=(uniform_density([-2.0], [2.0], [4000]),)),
        minus=MeasureComponent(atoms=(Atom((0.0,), 1.0),)),
        dimension=1,
    )


@pytest.fixture
def disc_measure() -> SignedMeasure:
    """Density 1/(2 pi) on the disc of radius 2 against a unit atom at the origin; stationary radius sqrt(2)."""
    plus = GriddedDensity.from_function(
        [-2.0, -2.0],
        [2.0, 2.0],
        [200, 200],
        lambda points: np.where(np.linalg.norm(points, axis=1) < 2, 1 / (2 * math.pi), 0.0),
    )
    return SignedMeasure(
        plus=MeasureComponent(densities=(plus,)),
        minus=MeasureComponent(atoms=(Atom((0.0, 0.0), 1.0),)),
        dimension=2,
    )


@pytest.fixture
def config(monkeypatch) -> Config:
    """Default configuration on a single thread."""
    monkeypatch.setenv("SIGLO_THREADS", "1")
    return Config.example()
