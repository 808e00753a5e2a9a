"""All unit tests for point configurations, regions and distances are defined here."""

import math

import numpy as np
import pytest

from siglo.exceptions.logic.geometry import EmptyPointSetError, InvalidRegionError
from siglo.geometry import (
    BallComplementRegion,
    BallUnion,
    PointConfig,
    config_distances,
    dist_to_config,
    dist_to_region,
    enlarge,
    hausdorff,
    project_region,
    region_distances,
)


@pytest.fixture
def lens() -> BallComplementRegion:
    """Complement of two unit discs centered at (0, 0) and (1, 0)."""
    return BallComplementRegion(centers=[[0.0, 0.0], [1.0, 0.0]], radii=[1.0, 1.0])


def test_cardinality_ignores_duplicates():
    sigma = PointConfig(np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 0.0]]))

    assert len(sigma) == 3
    assert sigma.cardinality == 2
    assert sigma.distinct().tolist() == [[0.0, 0.0], [1.0, 0.0]]


def test_empty_configuration_raises():
    with pytest.raises(EmptyPointSetError):
        PointConfig(np.empty((0, 2)))


def test_region_rejects_zero_radius():
    with pytest.raises(InvalidRegionError):
        BallComplementRegion(centers=[[0.0]], radii=[0.0])


def test_region_rejects_size_mismatch():
    with pytest.raises(InvalidRegionError):
        BallComplementRegion(centers=[[0.0, 0.0], [1.0, 1.0]], radii=[1.0])


def test_dist_to_config():
    sigma = PointConfig.from_list([[0.0], [8.0]], 1)

    assert dist_to_config([3.0], sigma) == 3.0
    distances, nearest = config_distances(np.array([[1.0], [7.0]]), sigma)
    assert distances.tolist() == [1.0, 1.0]
    assert nearest.tolist() == [0, 1]


def test_region_is_closed(lens):
    assert lens.contains(np.array([[-1.0, 0.0], [0.5, 0.0], [3.0, 3.0]])).tolist() == [True, False, True]
    assert not lens.complement().contains(np.array([[-1.0, 0.0]]))[0]


def test_distance_in_one_dimension_is_exact():
    region = BallComplementRegion(centers=[[0.0]], radii=[1.0])

    value, error = dist_to_region([0.25], region, 1e-3)

    assert value == pytest.approx(0.75)
    assert error == 0.0


def test_midpoint_of_an_interval_has_two_projections():
    region = BallComplementRegion(centers=[[0.0]], radii=[1.0])

    _, unique = project_region([0.0], region, 1e-3)

    assert not unique


def test_distance_inside_lens_goes_to_the_crossing(lens):
    result = region_distances(np.array([[0.5, 0.5], [0.5, 0.0]]), lens, 1e-3)

    assert result.values[0] == pytest.approx(math.sqrt(3) / 2 - 0.5)
    assert result.projections[0].tolist() == pytest.approx([0.5, math.sqrt(3) / 2])
    assert result.unique[0]
    assert result.values[1] == pytest.approx(math.sqrt(3) / 2)
    assert not result.unique[1]


def test_disc_center_is_a_ridge_point():
    region = BallComplementRegion(centers=[[0.0, 0.0]], radii=[2.0])

    result = region_distances(np.array([[0.0, 0.0]]), region, 1e-3)

    assert result.values[0] == pytest.approx(2.0)
    assert not result.unique[0]


def test_points_of_the_region_are_their_own_projection(lens):
    points = np.array([[3.0, 0.0], [0.0, 1.0]])

    result = region_distances(points, lens, 1e-3)

    assert result.values.tolist() == [0.0, 0.0]
    assert result.projections.tolist() == points.tolist()


def test_distance_in_three_dimensions_uses_the_radial_candidate():
    region = BallComplementRegion(centers=[[0.0, 0.0, 0.0]], radii=[1.0])

    value, error = dist_to_region([0.5, 0.0, 0.0], region, 0.05)

    assert value == pytest.approx(0.5)
    assert error == 0.0


def test_distance_rejects_nonpositive_mesh(lens):
    with pytest.raises(InvalidRegionError):
        region_distances(np.array([[0.0, 0.0]]), lens, 0.0)


def test_hausdorff_is_symmetric_max():
    a = np.array([[0.0, 0.0], [1.0, 0.0]])
    b = np.array([[0.0, 0.0], [3.0, 0.0]])

    assert hausdorff(a, b) == 2.0
    assert hausdorff(b, a) == 2.0


def test_hausdorff_of_empty_set_raises():
    with pytest.raises(EmptyPointSetError):
        hausdorff(np.empty((0, 2)), np.zeros((1, 2)))


def test_hausdorff_of_flat_sequences_uses_scalar_points():
    assert hausdorff([0.0, 1.0], [1.0, 2.0]) == 1.0
    assert hausdorff([0.0], [3.0]) == 3.0
    assert hausdorff(PointConfig.from_list([[0.0], [1.0]], 1), [1.0, 2.0]) == 1.0


def test_hausdorff_reads_flat_sequences_in_given_dimension():
    assert hausdorff([0.0, 1.0], [1.0, 2.0], dimension=2) == pytest.approx(math.sqrt(2))


def test_hausdorff_rejects_mixed_dimensions():
    with pytest.raises(ValueError):
        hausdorff([[0.0, 0.0]], [0.0])


def test_enlargements_are_open():
    sigma = PointConfig.from_list([[0.0]], 1)
    union = BallUnion(centers=np.array([[0.0, 0.0]]), radii=np.array([1.0]))
    region = BallComplementRegion(centers=[[0.0]], radii=[1.0])

    assert enlarge(sigma, 0.5)(np.array([[0.4], [0.5]])).tolist() == [True, False]
    assert enlarge(union, 0.5)(np.array([[1.4, 0.0], [1.5, 0.0]])).tolist() == [True, False]
    assert enlarge(region, 0.5, 1e-3)(np.array([[0.6], [0.5]])).tolist() == [True, False]


def test_enlargement_rejects_nonpositive_radius(lens):
    with pytest.raises(InvalidRegionError):
        enlarge(lens, 0.0)
