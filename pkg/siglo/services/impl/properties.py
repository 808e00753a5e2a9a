"""Randomized property suites of the measure and geometry layers are defined here.

Each suite draws its instances from a fixed seed and returns whether every trial held, with a short summary.
"""

import math

import numpy as np
from scipy.spatial import cKDTree

from siglo.geometry import BallComplementRegion, region_distances, surface_net
from siglo.measure import GriddedDensity, MeasureComponent, QuadratureNodes, discretize, total_mass, w1_distance
from siglo.measure.transport import w1_network_simplex

Outcome = tuple[bool, str]


def random_regions(count: int, seed: int) -> list[BallComplementRegion]:
    """Planar regions of one to four balls with centers in [-2, 2]^2 and radii in [0.3, 1.2]."""
    rng = np.random.default_rng(seed)
    regions = []
    for _ in range(count):
        balls = int(rng.integers(1, 5))
        regions.append(
            BallComplementRegion(centers=rng.uniform(-2, 2, size=(balls, 2)), radii=rng.uniform(0.3, 1.2, size=balls))
        )
    return regions


def random_nodes(rng: np.random.Generator, dimension: int, mass: float) -> QuadratureNodes:
    count = int(rng.integers(1, 9))
    weights = rng.uniform(0.1, 1.0, size=count)
    return QuadratureNodes(points=rng.normal(size=(count, dimension)), weights=weights * mass / weights.sum())


def random_component(rng: np.random.Generator, dimension: int) -> MeasureComponent:
    """Up to thirty atoms in [-1, 1]^n plus one random gridded density on the same cube."""
    count = int(rng.integers(1, 30))
    points, weights = rng.uniform(-1, 1, size=(count, dimension)), rng.uniform(1e-3, 3, size=count)
    resolution = tuple(int(r) for r in rng.integers(2, 12, size=dimension))
    density = GriddedDensity(lower=-np.ones(dimension), upper=np.ones(dimension), values=rng.uniform(0, 2, resolution))
    return MeasureComponent(atoms=MeasureComponent.from_arrays(points, weights).atoms, densities=(density,))


def w1_metric_axioms(trials: int, seed: int = 0) -> Outcome:
    """Symmetry within 1e-12, triangle inequality within 1e-9 and identity of indiscernibles."""
    rng = np.random.default_rng(seed)
    asymmetry, excess, failures = 0.0, -math.inf, 0
    for trial in range(trials):
        dimension = 1 + trial % 2
        mass = float(rng.uniform(0.5, 3.0))
        a, b, c = (random_nodes(rng, dimension, mass) for _ in range(3))
        ab, ba = w1_distance(a, b), w1_distance(b, a)
        asymmetry = max(asymmetry, abs(ab - ba))
        excess = max(excess, w1_distance(a, c) - ab - w1_distance(b, c))
        moved = QuadratureNodes(points=a.points + 1e-3, weights=a.weights)
        if w1_distance(a, a) > 1e-12 or not w1_distance(a, moved) > 0:
            failures += 1
    passed = asymmetry <= 1e-12 and excess <= 1e-9 and failures == 0
    return passed, f"asymmetry {asymmetry:.1e}, triangle excess {excess:.1e}, identity failures {failures}"


def w1_one_dimensional_agreement(trials: int, seed: int = 0) -> Outcome:
    """The sorted-CDF formula agrees with the network simplex plan within 1e-9."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        mass = float(rng.uniform(0.5, 3.0))
        mu, nu = random_nodes(rng, 1, mass), random_nodes(rng, 1, mass)
        worst = max(worst, abs(w1_distance(mu, nu) - mass * w1_network_simplex(mu, nu)))
    return worst <= 1e-9, f"largest disagreement {worst:.1e}"


def discretize_properties(trials: int, seed: int = 0) -> Outcome:
    """Exact mass conservation and W1(c, discretize(c, s)) <= mass * s * sqrt(n)."""
    rng = np.random.default_rng(seed)
    mismatches, worst = 0, -math.inf
    for trial in range(trials):
        dimension = 1 + trial % 3
        component = random_component(rng, dimension)
        step = float(rng.uniform(0.05, 1.5))
        atoms = discretize(component, step)
        mass = total_mass(component)
        if total_mass(MeasureComponent(atoms=tuple(atoms))) != mass:
            mismatches += 1
        if dimension < 3:
            worst = max(worst, w1_distance(component.nodes, atoms) - mass * step * math.sqrt(dimension))
    return mismatches == 0 and worst <= 1e-9, f"mass mismatches {mismatches}, largest W1 excess {worst:.1e}"


def distance_error_contract(regions: int, points: int, reference_mesh: float = 1e-5, seed: int = 0) -> Outcome:
    """dist_to_region against a fine surface net, and |x - projection| against the returned distance."""
    rng = np.random.default_rng(seed)
    violations = 0
    for region in random_regions(regions, seed):
        lower = np.min(region.centers - region.radii[:, None], axis=0) - 0.5
        upper = np.max(region.centers + region.radii[:, None], axis=0) + 0.5
        x = rng.uniform(lower, upper, size=(points, 2))
        result = region_distances(x, region, 1e-2)

        inside = region.contains(x)
        violations += int(np.count_nonzero(inside & ((result.values != 0) | (result.error_bounds != 0))))

        outside = ~inside
        net = surface_net(region, reference_mesh)
        reference, _ = cKDTree(net.points).query(x[outside])
        values, errors = result.values[outside], result.error_bounds[outside]
        far = (reference > values + net.covering_radius + 1e-9) | (reference < values - errors - 1e-9)
        offset = np.linalg.norm(x[outside] - result.projections[outside], axis=1)
        violations += int(np.count_nonzero(far | (np.abs(offset - values) > errors + 1e-9)))
    return violations == 0, f"{violations} of {regions * points} cases outside their error bound"
