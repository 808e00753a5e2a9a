"""All unit tests for the signed average-distance functional are defined here."""

import numpy as np
import pytest

from siglo.exceptions.logic.solver import EmptyEssentialPartError
from siglo.geometry import BallComplementRegion, PointConfig
from siglo.measure import MeasureComponent, SignedMeasure
from siglo.objective import essential_part, eval_F, eval_F_region, rescaled_gap


def test_fermat_weber_pair(fermat_weber):
    value = eval_F(PointConfig.from_list([[0.0], [8.0]], 1), fermat_weber)

    assert value.value == -14.0
    assert value.plus_part == 2.0
    assert value.minus_part == 16.0
    assert value.quadrature_step == 0.0


def test_duplicated_points_do_not_change_F(fermat_weber):
    single = eval_F(PointConfig.from_list([[4.0]], 1), fermat_weber)
    doubled = eval_F(PointConfig.from_list([[4.0], [4.0]], 1), fermat_weber)

    assert single.value == doubled.value


def test_region_value_at_the_stationary_interval(line_with_atom):
    region = BallComplementRegion(centers=[[0.0]], radii=[1.0])

    value = eval_F_region(region, line_with_atom, 1e-3)

    assert value.minus_part == 1.0
    assert value.plus_part == pytest.approx(1.0, abs=1e-6)
    assert value.distance_error_bound == 0.0


def test_region_value_on_the_line_instance(line_measure):
    region = BallComplementRegion(centers=[[0.0]], radii=[1.0])

    assert eval_F_region(region, line_measure, 1e-3).value == pytest.approx(-0.75, abs=1e-5)


def test_essential_part_keeps_tied_realizers(fermat_weber):
    sigma = PointConfig.from_list([[0.0], [8.0], [20.0]], 1)

    essential = essential_part(sigma, fermat_weber)

    assert essential.points.ravel().tolist() == [0.0, 8.0]


def test_essential_part_of_an_empty_measure_raises():
    phi = SignedMeasure(plus=MeasureComponent(), dimension=1)

    with pytest.raises(EmptyEssentialPartError):
        essential_part(PointConfig(np.zeros((1, 1))), phi)


def test_rescaled_gap():
    assert rescaled_gap(4, 1.5, 1.0, 2) == pytest.approx(1.0)
    assert rescaled_gap(8, 1.0, 0.5, 1) == pytest.approx(4.0)
    with pytest.raises(ValueError):
        rescaled_gap(0, 1.0, 0.0, 1)
