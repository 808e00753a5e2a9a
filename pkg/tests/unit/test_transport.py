"""All unit tests for transport distances are defined here."""

import numpy as np
import pytest

from siglo.exceptions.logic.measure import MassMismatchError
from siglo.measure import Atom, QuadratureNodes, w1_distance
from siglo.measure.transport import w1_network_simplex


def test_w1_of_shifted_atom_is_mass_times_shift():
    assert w1_distance([Atom((0.0,), 2.0)], [Atom((3.0,), 2.0)]) == pytest.approx(6.0)


def test_w1_in_two_dimensions_matches_manual_plan():
    mu = [Atom((0.0, 0.0), 1.0), Atom((1.0, 0.0), 1.0)]
    nu = [Atom((0.0, 1.0), 1.0), Atom((1.0, 1.0), 1.0)]

    assert w1_distance(mu, nu) == pytest.approx(2.0)


def test_w1_accepts_node_arrays():
    mu = QuadratureNodes(points=np.array([[0.0, 0.0]]), weights=np.array([0.5]))
    nu = QuadratureNodes(points=np.array([[3.0, 4.0]]), weights=np.array([0.5]))

    assert w1_distance(mu, nu) == pytest.approx(2.5)


def test_w1_is_symmetric():
    rng = np.random.default_rng(0)
    mu = QuadratureNodes(points=rng.normal(size=(6, 2)), weights=np.full(6, 1 / 6))
    nu = QuadratureNodes(points=rng.normal(size=(4, 2)), weights=np.full(4, 1 / 4))

    assert w1_distance(mu, nu) == pytest.approx(w1_distance(nu, mu))


def test_w1_rejects_different_masses():
    with pytest.raises(MassMismatchError):
        w1_distance([Atom((0.0,), 1.0)], [Atom((0.0,), 2.0)])


def test_w1_of_empty_measures_is_zero():
    empty = QuadratureNodes(points=np.empty((0, 2)), weights=np.empty(0))

    assert w1_distance(empty, empty) == 0.0


def _random_nodes(rng: np.random.Generator, dimension: int, mass: float) -> QuadratureNodes:
    count = int(rng.integers(1, 9))
    weights = rng.uniform(0.1, 1.0, size=count)
    return QuadratureNodes(points=rng.normal(size=(count, dimension)), weights=weights * mass / weights.sum())


@pytest.mark.parametrize("dimension", [1, 2])
def test_w1_satisfies_triangle_inequality(dimension):
    rng = np.random.default_rng(dimension)
    for _ in range(200):
        a, b, c = (_random_nodes(rng, dimension, 2.0) for _ in range(3))

        assert w1_distance(a, c) <= w1_distance(a, b) + w1_distance(b, c) + 1e-9


def test_w1_vanishes_only_on_equal_measures():
    rng = np.random.default_rng(5)
    mu = _random_nodes(rng, 2, 1.0)
    moved = QuadratureNodes(points=mu.points + np.array([[1e-3, 0.0]]), weights=mu.weights)

    assert w1_distance(mu, mu) == pytest.approx(0.0, abs=1e-12)
    assert w1_distance(mu, moved) > 0


def test_w1_sorted_cdf_matches_network_simplex_in_one_dimension():
    rng = np.random.default_rng(7)
    for _ in range(200):
        mu, nu = _random_nodes(rng, 1, 3.0), _random_nodes(rng, 1, 3.0)

        assert w1_distance(mu, nu) == pytest.approx(3.0 * w1_network_simplex(mu, nu), abs=1e-9)
