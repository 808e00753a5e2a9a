"""All unit tests for quantization constants and limit densities are defined here."""

import math

import numpy as np
import pytest

from siglo.asymptotics import (
    THETA_1,
    THETA_2,
    DensityField,
    empirical_measure,
    estimate_theta,
    g_infinity,
    gamma_limit_value,
    known_theta,
    limit_density,
    limit_energy,
    smooth_empirical,
    theta_lower_bound,
)
from siglo.exceptions.logic.measure import InvalidMeasureError
from siglo.exceptions.logic.solver import EmptyCandidateListError, ZeroDensityIntegralError
from siglo.geometry import BallComplementRegion, PointConfig

from .conftest import uniform_density


@pytest.fixture
def unit_line() -> DensityField:
    return DensityField(uniform_density([-2.0], [2.0], [4000]))


def interval(radius: float) -> BallComplementRegion:
    return BallComplementRegion(centers=[[0.0]], radii=[radius])


def test_known_constants():
    assert known_theta(1) == THETA_1 == 0.25
    assert known_theta(2) == pytest.approx(0.3772, abs=1e-4)
    assert known_theta(3) is None


def test_lower_bound():
    assert theta_lower_bound(1) == pytest.approx(0.25)
    assert theta_lower_bound(2) == pytest.approx(0.3761, abs=1e-4)
    assert theta_lower_bound(2) < THETA_2


def test_estimate_in_one_dimension():
    assert estimate_theta(1, 8, 1, 0, 256) == pytest.approx(0.25, abs=1e-3)


@pytest.mark.parametrize("n, k", [(4, 8), (1, 0)])
def test_estimate_rejects_bad_arguments(n, k):
    with pytest.raises(ValueError):
        estimate_theta(n, k, 1, 0, 16)


def test_limit_density_lives_on_the_region(unit_line):
    rho = limit_density(unit_line, interval(1.0))

    assert rho.normalized
    assert rho.mass() == pytest.approx(1.0)
    assert rho.value_at(np.array([[-1.5], [0.0], [1.5]])).tolist() == pytest.approx([0.5, 0.0, 0.5])


def test_limit_energy_of_the_line_instance(unit_line):
    rho = limit_density(unit_line, interval(1.0))

    assert gamma_limit_value(rho, interval(1.0), unit_line, THETA_1) == pytest.approx(1.0)
    assert limit_energy(unit_line, interval(1.0), THETA_1) == pytest.approx(1.0)


def test_limit_density_needs_mass_in_the_region():
    narrow = DensityField(uniform_density([-0.5], [0.5], [100]))

    with pytest.raises(ZeroDensityIntegralError):
        limit_density(narrow, interval(1.0))


def test_energy_needs_positive_theta(unit_line):
    with pytest.raises(ValueError):
        gamma_limit_value(limit_density(unit_line, interval(1.0)), interval(1.0), unit_line, 0.0)


def test_g_infinity_takes_the_best_carrying_region(unit_line):
    rho = limit_density(unit_line, interval(1.0))

    assert g_infinity(rho, [interval(0.5), interval(1.0)], unit_line, THETA_1) == pytest.approx(1.0)
    assert g_infinity(rho, [interval(1.5)], unit_line, THETA_1) == math.inf
    with pytest.raises(EmptyCandidateListError):
        g_infinity(rho, [], unit_line, THETA_1)


def test_empirical_measure_merges_duplicates():
    mu = empirical_measure(PointConfig.from_list([[1.0], [0.0], [0.0]], 1))

    assert mu.points.ravel().tolist() == [0.0, 1.0]
    assert mu.weights.tolist() == pytest.approx([2 / 3, 1 / 3])
    assert mu.total == pytest.approx(1.0)


def test_smoothed_empirical_measure_is_a_probability(unit_line):
    mu = empirical_measure(PointConfig.from_list(np.linspace(-1.9, 1.9, 16)[:, None], 1))

    smoothed = smooth_empirical(mu, unit_line)

    assert smoothed.normalized
    assert smoothed.values.shape == (4,)


def test_normalized_field_must_integrate_to_one():
    with pytest.raises(InvalidMeasureError):
        DensityField(uniform_density([0.0], [2.0], [4]), normalized=True)
