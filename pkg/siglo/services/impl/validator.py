"""Numerical acceptance battery is defined here.

Every check builds its own small instance, runs the library on it and compares with a closed-form value.
"""

import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
import structlog
from scipy.spatial import cKDTree

from siglo.asymptotics import (
    DensityField,
    convergence_report,
    estimate_theta,
    gamma_limit_value,
    limit_density,
    theta_lower_bound,
)
from siglo.core.config import Config
from siglo.geometry import BallComplementRegion, PointConfig, surface_net, volume_net
from siglo.geometry.nets import sample_boundary, sample_shell
from siglo.kpoint import SolverConfig, nonexistence_probe
from siglo.measure import Atom, GriddedDensity, MeasureComponent, SignedMeasure, ball_mass, discretize
from siglo.objective import eval_F, eval_F_region
from siglo.prometheus.metrics import VALIDATION_CHECKS
from siglo.region import (
    balanced_projection_residual,
    canonicalize,
    first_variation,
    mass_check,
    optimize_radii,
    radial_field,
    stationary_radius,
)
from siglo.schemas import CheckResult, ValidateResult
from siglo.services.validator import Validator

from .brute_force import BruteForceSolver
from .local_search import LocalSearchSolver
from .properties import (
    discretize_properties,
    distance_error_contract,
    random_regions,
    w1_metric_axioms,
    w1_one_dimensional_agreement,
)

Outcome = tuple[bool, str]


@dataclass(frozen=True)
class CheckContext:
    """Constants and parallelism every check may use."""

    theta_1: float
    theta_2: float
    max_workers: int


@dataclass(frozen=True)
class Check:
    name: str
    func: Callable[[CheckContext], Outcome]
    heavy: bool = False


def _density(lower, upper, resolution, value: float) -> GriddedDensity:
    return GriddedDensity(lower=lower, upper=upper, values=np.full(tuple(resolution), value, dtype=float))


def line_instance(plus_cells: int = 4000, minus_cells: int = 200) -> SignedMeasure:
    """Unit density on [-2, 2] against density 4 on [-1/4, 1/4]; optimal region (-1, 1)^c with F = -3/4."""
    return SignedMeasure(
        plus=MeasureComponent(densities=(_density([-2.0], [2.0], [plus_cells], 1.0),)),
        minus=MeasureComponent(densities=(_density([-0.25], [0.25], [minus_cells], 4.0),)),
        dimension=1,
    )


def fermat_weber_instance() -> SignedMeasure:
    return SignedMeasure(
        plus=MeasureComponent(atoms=(Atom((1.0,), 2.0), Atom((8.0,), 6.0))),
        minus=MeasureComponent(atoms=(Atom((0.0,), 1.0), Atom((4.0,), 4.0))),
        dimension=1,
    )


def _relative(value: float, target: float) -> float:
    return abs(value - target) / abs(target)


def check_theta_1d(context: CheckContext) -> Outcome:
    theta = estimate_theta(1, 32, 1, 0, 1024, init="lattice", max_workers=context.max_workers)
    error = _relative(theta, context.theta_1)
    return error <= 5e-3, f"estimate {theta:.6f} against {context.theta_1:.6f}, relative error {error:.2e}"


def check_theta_2d(context: CheckContext) -> Outcome:
    theta = estimate_theta(2, 256, 8, 0, 256, init="lattice", max_workers=context.max_workers)
    error = _relative(theta, context.theta_2)
    floor = theta_lower_bound(2) - 5e-3
    return (
        error <= 0.05 and theta >= floor,
        f"estimate {theta:.5f} against {context.theta_2:.5f} (relative error {error:.2e}), lower bound {floor:.5f}",
    )


def check_fermat_weber(context: CheckContext) -> Outcome:
    phi = fermat_weber_instance()
    candidates = np.arange(17, dtype=float)[:, None] * 0.5
    exact = BruteForceSolver(candidates=candidates).solve(phi, SolverConfig(k=2))
    heuristic = LocalSearchSolver(max_workers=context.max_workers).solve(phi, SolverConfig(k=2, restarts=8))
    best = sorted(exact.best.points.ravel().tolist())
    passed = best == [0.0, 8.0] and exact.value == -14.0 and abs(heuristic.value - exact.value) <= 1e-3
    return passed, f"exhaustive {best} with F {exact.value}, local search F {heuristic.value:.6f}"


def check_nonexistence(_context: CheckContext) -> Outcome:
    probe = nonexistence_probe([0.5 * i for i in range(21)], 10_000)
    values = dict(probe.rows)
    at_zero, at_one = values[0.0], values[1.0]
    passed = (
        abs(at_zero - 1.0) <= 1e-3 and abs(at_one - (4 / math.pi - 1)) <= 1e-3 and probe.strictly_decreasing
    )
    return passed, f"f(0) = {at_zero:.6f}, f(1) = {at_one:.6f}, strictly decreasing: {probe.strictly_decreasing}"


def check_radius_2d(_context: CheckContext) -> Outcome:
    plus = GriddedDensity.from_function(
        [-2.0, -2.0],
        [2.0, 2.0],
        [400, 400],
        lambda points: np.where(np.linalg.norm(points, axis=1) < 2, 1 / (2 * math.pi), 0.0),
    )
    phi = SignedMeasure(
        plus=MeasureComponent(densities=(plus,)),
        minus=MeasureComponent(atoms=(Atom((0.0, 0.0), 1.0),)),
        dimension=2,
    )
    region, _ = optimize_radii(phi, BallComplementRegion(centers=[[0.0, 0.0]], radii=[1.0]), 1e-4, 20)
    radius = float(region.radii[0])
    bisected = stationary_radius(phi.plus, [0.0, 0.0], 1.0, 1e-4)
    mass = ball_mass(phi.plus, [0.0, 0.0], radius)
    passed = abs(radius - math.sqrt(2)) <= 1e-3 and abs(bisected - math.sqrt(2)) <= 1e-3 and abs(mass - 1) <= 5e-3
    return passed, f"optimized radius {radius:.6f}, bisected {bisected:.6f}, ball mass {mass:.6f}"


def check_radius_1d(_context: CheckContext) -> Outcome:
    phi = SignedMeasure(
        plus=MeasureComponent(densities=(_density([-2.0], [2.0], [40_000], 1.0),)),
        minus=MeasureComponent(atoms=(Atom((0.0,), 1.0),)),
        dimension=1,
    )
    region, _ = optimize_radii(phi, BallComplementRegion(centers=[[0.0]], radii=[1.0]), 1e-5, 20)
    radius = float(region.radii[0])
    return abs(radius - 0.5) <= 1e-4, f"optimized radius {radius:.6f}"


def _interval_region(phi: SignedMeasure, reach: float) -> BallComplementRegion:
    """Balls around the negative atoms whose union is (-reach, reach)."""
    centers = np.array([atom.location for atom in phi.minus.atoms], dtype=float)
    return BallComplementRegion(centers=centers, radii=reach - np.abs(centers[:, 0]))


def _discretized_line_instance(mesh: float) -> SignedMeasure:
    phi = line_instance(plus_cells=int(round(4 / mesh)))
    return SignedMeasure(plus=phi.plus, minus=MeasureComponent(atoms=tuple(discretize(phi.minus, 0.05))), dimension=1)


def check_certificates_1d(_context: CheckContext) -> Outcome:
    phi = line_instance()
    single = BallComplementRegion(centers=[[0.0]], radii=[0.8])
    variation, _ = first_variation(single, phi, radial_field([0.0], 0.8), 1e-3)

    residuals = []
    for mesh in (1e-3, 5e-4):
        discrete = _discretized_line_instance(mesh)
        region, _ = optimize_radii(discrete, _interval_region(discrete, 1.5), mesh, 50)
        residuals.append(balanced_projection_residual(region, discrete, mesh).residual)
    discrete = _discretized_line_instance(1e-3)
    optimal = _interval_region(discrete, 1.0)
    gap = mass_check(optimal, discrete)
    wrong = balanced_projection_residual(_interval_region(discrete, 1.5), discrete, 1e-3).residual

    coarse, fine = residuals
    decreasing = fine <= coarse / 1.5 or fine <= 1e-6
    passed = abs(variation + 0.4) <= 1e-3 and abs(gap) <= 1e-3 and coarse <= 0.02 and decreasing and wrong >= 0.2
    return passed, (
        f"first variation {variation:.6f}, mass gap {gap:.2e}, residuals {coarse:.2e} -> {fine:.2e},"
        f" residual at reach 1.5 {wrong:.4f}"
    )


def _gamma_rows(phi: SignedMeasure, region: BallComplementRegion, theta: float, schedule, config, workers):
    f_plus = DensityField(phi.plus.densities[0])
    rho = limit_density(f_plus, region)
    energy = gamma_limit_value(rho, region, f_plus, theta)
    rows = convergence_report(phi, schedule, config, region, rho, max_workers=workers)
    return energy, rows


def check_gamma_1d(context: CheckContext) -> Outcome:
    region = BallComplementRegion(centers=[[0.0]], radii=[1.0])
    config = SolverConfig(k=16, restarts=4, seed=0)
    energy, rows = _gamma_rows(line_instance(), region, context.theta_1, [16, 64], config, context.max_workers)
    gaps = {row.k: row.rescaled_gap for row in rows}
    passed = (
        abs(energy - 1.0) <= 1e-6 and _relative(gaps[16], energy) <= 0.35 and _relative(gaps[64], energy) <= 0.2
    )
    return passed, f"limit energy {energy:.6f}, rescaled gaps {gaps}"


def check_gamma_2d(context: CheckContext) -> Outcome:
    phi = SignedMeasure(
        plus=MeasureComponent(densities=(_density([-2.0, -2.0], [2.0, 2.0], [128, 128], 1.0),)),
        minus=MeasureComponent(atoms=(Atom((0.0, 0.0), math.pi),)),
        dimension=2,
    )
    region = BallComplementRegion(centers=[[0.0, 0.0]], radii=[1.0])
    config = SolverConfig(k=16, restarts=4, seed=0, init="lattice")
    energy, rows = _gamma_rows(phi, region, context.theta_2, [16, 64, 256], config, context.max_workers)
    target = context.theta_2 * (16 - math.pi) ** 1.5
    last = rows[-1].rescaled_gap
    w1 = [row.w1_to_rho for row in rows]
    decreasing = all(later < earlier for earlier, later in zip(w1, w1[1:]))
    passed = _relative(energy, target) <= 0.01 and _relative(last, energy) <= 0.3 and decreasing
    return passed, (
        f"limit energy {energy:.4f} (closed form {target:.4f}), rescaled gaps {[r.rescaled_gap for r in rows]},"
        f" W1 to the limit density {w1}"
    )


def _covered(points: np.ndarray, net_points: np.ndarray, delta: float) -> bool:
    if net_points.shape[0] == 0:
        return points.shape[0] == 0
    distance, _ = cKDTree(net_points).query(points)
    return bool(np.all(distance <= delta + 1e-9))


def _covering_check(samples: int) -> Callable[[CheckContext], Outcome]:
    def check(_context: CheckContext) -> Outcome:
        delta, eps, failures = 0.05, 0.2, []
        for i, region in enumerate(random_regions(50, seed=0)):
            surface = surface_net(region, delta)
            shell = volume_net(region, eps, delta)
            within_bounds = len(surface) <= surface.cardinality_bound and len(shell) <= shell.cardinality_bound
            covering = _covered(sample_boundary(region, samples, seed=i), surface.points, delta) and _covered(
                sample_shell(region, eps, samples, seed=i), shell.points, delta
            )
            if not (within_bounds and covering):
                failures.append(i)
        return not failures, f"regions violating a net bound or the covering radius: {failures}"

    return check


def check_canonical_sandwich(_context: CheckContext) -> Outcome:
    rng = np.random.default_rng(1)
    worst = -math.inf
    for _ in range(20):
        plus = MeasureComponent.from_arrays(rng.uniform(-3, 3, size=(12, 2)), rng.uniform(0.5, 2, size=12))
        minus = MeasureComponent.from_arrays(rng.uniform(-1, 1, size=(3, 2)), rng.uniform(0.1, 0.5, size=3))
        phi = SignedMeasure(plus=plus, minus=minus, dimension=2)
        sigma = PointConfig(rng.uniform(-3, 3, size=(4, 2)))
        region = canonicalize(sigma, phi)
        worst = max(worst, eval_F_region(region, phi, 1e-6).value - eval_F(sigma, phi).value)
    return worst <= 1e-9, f"largest F(canonical region) - F(configuration): {worst:.3e}"


def check_determinism(context: CheckContext) -> Outcome:
    phi = line_instance(plus_cells=400, minus_cells=20)
    config = SolverConfig(k=6, restarts=4, seed=7)
    first = LocalSearchSolver(max_workers=context.max_workers).solve(phi, config)
    second = LocalSearchSolver(max_workers=1).solve(phi, config)
    same = np.array_equal(first.best.points, second.best.points) and first.value == second.value
    return same, f"values {first.value!r} and {second.value!r}"


def check_measure_properties(_context: CheckContext) -> Outcome:
    outcomes = (
        w1_metric_axioms(1000, seed=0),
        w1_one_dimensional_agreement(1000, seed=1),
        discretize_properties(1000, seed=2),
    )
    return all(passed for passed, _ in outcomes), "; ".join(detail for _, detail in outcomes)


def check_distance_contract(_context: CheckContext) -> Outcome:
    return distance_error_contract(20, 500, reference_mesh=1e-5, seed=0)


CHECKS: tuple[Check, ...] = (
    Check("theta-1d", check_theta_1d),
    Check("fermat-weber", check_fermat_weber),
    Check("nonexistence", check_nonexistence),
    Check("radius-1d", check_radius_1d),
    Check("radius-2d", check_radius_2d),
    Check("certificates-1d", check_certificates_1d),
    Check("gamma-1d", check_gamma_1d),
    Check("nets", _covering_check(200)),
    Check("canonical-sandwich", check_canonical_sandwich),
    Check("determinism", check_determinism),
    Check("measure-properties", check_measure_properties),
    Check("theta-2d", check_theta_2d, heavy=True),
    Check("gamma-2d", check_gamma_2d, heavy=True),
    Check("nets-dense", _covering_check(1000), heavy=True),
    Check("distance-contract", check_distance_contract, heavy=True),
)


class ValidatorImpl(Validator):
    """Runs the acceptance checks in a fixed order; a failing check never stops the others."""

    def __init__(self, config: Config, logger: structlog.stdlib.BoundLogger = structlog.get_logger(__name__)):
        self._config = config
        self._logger = logger

    def check_names(self, quick: bool = False) -> list[str]:
        return [check.name for check in CHECKS if not (quick and check.heavy)]

    def run(self, quick: bool = False, checks: list[str] | None = None, theta_1: float | None = None) -> ValidateResult:
        known = {check.name for check in CHECKS}
        unknown = sorted(set(checks or []) - known)
        if unknown:
            raise ValueError(f"unknown checks {unknown}, available: {sorted(known)}")

        context = CheckContext(
            theta_1=theta_1 or self._config.constants.theta_1,
            theta_2=self._config.constants.theta_2,
            max_workers=self._config.runtime.max_workers(),
        )
        results = []
        for check in CHECKS:
            if checks is not None and check.name not in checks:
                continue
            if check.heavy and quick and checks is None:
                results.append(CheckResult(name=check.name, status="skipped", detail="long check, run without --quick"))
            else:
                results.append(self._run_check(check, context))
            VALIDATION_CHECKS.labels(results[-1].status).inc()
        return ValidateResult(passed=all(result.status != "fail" for result in results), checks=results)

    def _run_check(self, check: Check, context: CheckContext) -> CheckResult:
        logger = self._logger.bind(check=check.name)
        logger.info("check started")
        try:
            passed, detail = check.func(context)
        except Exception as exc:  # pylint: disable=broad-except
            logger.exception("check raised")
            return CheckResult(name=check.name, status="fail", detail=f"{type(exc).__name__}: {exc}")
        status = "pass" if passed else "fail"
        (logger.info if passed else logger.warning)("check finished", status=status, detail=detail)
        return CheckResult(name=check.name, status=status, detail=detail)
