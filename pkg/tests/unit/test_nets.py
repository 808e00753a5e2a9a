"""All unit tests for surface and volume nets are defined here."""

import math

import numpy as np
import pytest
from scipy.spatial import cKDTree

from siglo.exceptions.logic.geometry import InvalidRegionError
from siglo.geometry import (
    BallComplementRegion,
    external_ball_check,
    perimeter_bound,
    surface_net,
    unit_ball_volume,
    volume_net,
)
from siglo.geometry.nets import _cell_representatives, _nearest_shell_points, sample_boundary, sample_shell


def random_regions(count: int, seed: int) -> list[BallComplementRegion]:
    rng = np.random.default_rng(seed)
    regions = []
    for _ in range(count):
        balls = int(rng.integers(1, 5))
        regions.append(
            BallComplementRegion(centers=rng.uniform(-2, 2, size=(balls, 2)), radii=rng.uniform(0.3, 1.2, size=balls))
        )
    return regions


def test_unit_ball_volume():
    assert unit_ball_volume(1) == pytest.approx(2.0)
    assert unit_ball_volume(2) == pytest.approx(math.pi)
    assert unit_ball_volume(3) == pytest.approx(4 * math.pi / 3)


def test_surface_net_is_exact_in_one_dimension():
    region = BallComplementRegion(centers=[[0.0], [1.0]], radii=[1.0, 1.0])

    net = surface_net(region, 0.1)

    assert net.points[:, 0].tolist() == [-1.0, 2.0]
    assert net.covering_radius == 0.0


@pytest.mark.parametrize("seed", [0, 1])
def test_surface_net_covers_boundary_within_bound(seed):
    delta = 0.05
    for i, region in enumerate(random_regions(10, seed)):
        net = surface_net(region, delta)
        boundary = sample_boundary(region, 200, seed=i)

        distance = np.min(np.linalg.norm(boundary[:, None, :] - net.points[None], axis=2), axis=1)

        assert len(net) <= net.cardinality_bound
        assert np.all(distance <= delta + 1e-12)
        assert np.all(region.contains(net.points))


def test_perimeter_bound_dominates_circle_length():
    region = BallComplementRegion(centers=[[0.0, 0.0]], radii=[1.0])

    assert perimeter_bound(region) >= 2 * math.pi


def test_volume_net_points_lie_in_the_shell():
    region = BallComplementRegion(centers=[[0.0, 0.0], [1.5, 0.0]], radii=[1.0, 0.8])

    net = volume_net(region, 0.3, 0.1)
    gaps = region.gap(net.points)

    assert len(net) <= net.cardinality_bound
    assert np.all(gaps >= -1e-9)
    assert np.all(gaps < 0.3)


def test_volume_net_covers_shell_interior():
    region = BallComplementRegion(centers=[[0.0, 0.0]], radii=[1.0])
    rng = np.random.default_rng(0)
    angles = rng.uniform(0, 2 * math.pi, 300)
    radii = 1.0 + rng.uniform(0.02, 0.18, 300)
    shell = np.stack([radii * np.cos(angles), radii * np.sin(angles)], axis=1)

    net = volume_net(region, 0.2, 0.05)

    distance = np.min(np.linalg.norm(shell[:, None, :] - net.points[None], axis=2), axis=1)
    assert np.all(distance <= 0.05 + 1e-12)


def test_volume_net_of_zero_thickness_is_the_surface_net():
    region = BallComplementRegion(centers=[[0.0, 0.0]], radii=[1.0])

    assert volume_net(region, 0.0, 0.1) is surface_net(region, 0.1)


def test_nets_reject_bad_parameters():
    region = BallComplementRegion(centers=[[0.0, 0.0]], radii=[1.0])

    with pytest.raises(InvalidRegionError):
        surface_net(region, 0.0)
    with pytest.raises(InvalidRegionError):
        volume_net(region, -1.0, 0.1)


def test_external_ball_condition_holds_up_to_the_smallest_radius():
    region = BallComplementRegion(centers=[[0.0, 0.0], [3.0, 0.0]], radii=[1.0, 0.5])

    assert external_ball_check(region, 0.5, 64)
    assert not external_ball_check(region, 0.9, 64)


@pytest.mark.parametrize("eps, delta", [(0.2, 0.05), (0.1, 0.08), (0.5, 0.1)])
def test_volume_net_covers_random_shells(eps, delta):
    for i, region in enumerate(random_regions(20, seed=3)):
        shell = sample_shell(region, eps, 1000, seed=i)

        net = volume_net(region, eps, delta)

        distance, _ = cKDTree(net.points).query(shell)
        assert len(net) <= net.cardinality_bound
        assert np.all(distance <= delta + 1e-9), f"region {i}"


def test_shell_samples_lie_in_the_shell():
    region = BallComplementRegion(centers=[[0.0, 0.0], [1.5, 0.0]], radii=[1.0, 0.8])

    shell = sample_shell(region, 0.25, 500, seed=1)
    gaps = region.gap(shell)

    assert shell.shape == (500, 2)
    assert np.all((gaps >= 0) & (gaps < 0.25))


def test_nearest_shell_point_from_inside_two_disks_is_their_crossing():
    region = BallComplementRegion(centers=[[0.0, 0.0], [1.5, 0.0]], radii=[1.0, 1.0])

    nearest = _nearest_shell_points(region, np.array([[0.75, 0.5]]), 0.2, 0.01)

    assert nearest[0] == pytest.approx([0.75, math.sqrt(1 - 0.75**2)])


def test_nearest_shell_point_beyond_the_shell_is_radial():
    region = BallComplementRegion(centers=[[0.0, 0.0]], radii=[1.0])

    nearest = _nearest_shell_points(region, np.array([[2.0, 0.0], [0.0, 0.5], [0.0, 1.1]]), 0.3, 0.01)

    assert nearest[0] == pytest.approx([1.3, 0.0])
    assert region.gap(nearest[:1])[0] < 0.3
    assert nearest[1] == pytest.approx([0.0, 1.0])
    assert nearest[2] == pytest.approx([0.0, 1.1])


def test_cell_whose_candidates_miss_the_shell_keeps_a_point():
    region = BallComplementRegion(centers=[[0.0, 0.0]], radii=[1.0])
    cell = 0.05 / math.sqrt(2)
    index = np.array([[24, 24]])
    midpoints = (index + 0.5) * cell

    points = _cell_representatives(region, index, midpoints, cell, 0.201)

    assert points.shape == (1, 2)
    assert np.linalg.norm(points[0]) == pytest.approx(1.201)
    assert region.gap(points)[0] < 0.201
    assert np.linalg.norm(points[0] - midpoints[0]) <= 0.025
