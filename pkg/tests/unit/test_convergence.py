"""All unit tests for k-sweep convergence experiments are defined here."""

import pytest

from siglo.asymptotics import THETA_1, DensityField, convergence_report, limit_density, limit_energy
from siglo.asymptotics.convergence import comparison_step
from siglo.geometry import BallComplementRegion
from siglo.kpoint import SolverConfig

REGION = BallComplementRegion(centers=[[0.0]], radii=[1.0])


@pytest.fixture
def rho(line_measure) -> DensityField:
    return limit_density(DensityField(line_measure.plus.densities[0]), REGION)


def test_comparison_step(rho):
    assert comparison_step(rho, 4) == pytest.approx(0.5)


def test_rows_follow_the_schedule(line_measure, rho):
    rows = convergence_report(line_measure, [4, 8], SolverConfig(k=4, restarts=2), REGION, rho, max_workers=2)

    assert [row.k for row in rows] == [4, 8]
    assert all(row.extrapolated for row in rows)
    assert all(row.rescaled_gap > 0 for row in rows)
    assert all(row.w1_to_rho >= 0 for row in rows)


def test_rescaled_gap_approaches_the_limit_energy(line_measure, rho):
    energy = limit_energy(DensityField(line_measure.plus.densities[0]), REGION, THETA_1)

    rows = convergence_report(line_measure, [16], SolverConfig(k=16, restarts=4), REGION, rho)

    assert abs(rows[0].rescaled_gap - energy) <= 0.35 * energy


@pytest.mark.parametrize("schedule", [[], [8, 4], [4, 4]])
def test_schedule_must_increase(line_measure, rho, schedule):
    with pytest.raises(ValueError):
        convergence_report(line_measure, schedule, SolverConfig(k=1), REGION, rho)
