"""Multistart local search k-point solver implementation is defined here."""

from concurrent.futures import ThreadPoolExecutor

import numpy as np
import structlog
from scipy.spatial import cKDTree

from siglo.geometry import PointConfig
from siglo.kpoint.certificates import boundedness_certificate, check_existence_hypothesis
from siglo.kpoint.descent import CoordinateDescent, DescentResult, NearestAssignment
from siglo.kpoint.initial import lattice_initial, sample_initial
from siglo.kpoint.types import SolveReport, SolverConfig
from siglo.measure import SignedMeasure, bounding_ball
from siglo.objective import eval_F
from siglo.prometheus.metrics import OBJECTIVE_EVALUATIONS, SOLVE_TIME, SOLVER_RESTARTS
from siglo.services.solver import KPointSolver


def restart_generator(seed: int, restart: int) -> np.random.Generator:
    """Private generator of one restart: seed xor restart index."""
    return np.random.default_rng(seed ^ restart)


def essential_cleanup(points: np.ndarray, phi: SignedMeasure) -> np.ndarray:
    """Replace points that are nearest to no node by a copy of the closest point that is."""
    nodes = phi.signed_nodes
    if len(nodes) == 0:
        return points
    _, nearest = cKDTree(points).query(nodes.points)
    essential = np.unique(np.asarray(nearest))
    idle = np.setdiff1d(np.arange(points.shape[0]), essential)
    if idle.size == 0:
        return points
    cleaned = points.copy()
    _, closest = cKDTree(points[essential]).query(points[idle])
    cleaned[idle] = points[essential[np.asarray(closest)]]
    return cleaned


def clip_to_ball(points: np.ndarray, center: np.ndarray, radius: float) -> np.ndarray:
    """Radially project points lying farther than `radius` from `center` onto that sphere."""
    offsets = points - center
    norms = np.linalg.norm(offsets, axis=1)
    outside = norms > radius
    if not np.any(outside):
        return points
    clipped = points.copy()
    clipped[outside] = center + offsets[outside] * (radius / norms[outside])[:, None]
    return clipped


def _ordering_key(result: DescentResult) -> tuple:
    rows = sorted(map(tuple, result.points.tolist()))
    return result.value, rows


class LocalSearchSolver(KPointSolver):
    """Seeded restarts of coordinate-wise descent run in a thread pool and merged deterministically."""

    name = "local_search"

    def __init__(
        self,
        max_workers: int = 1,
        logger: structlog.stdlib.BoundLogger = structlog.get_logger(__name__),
    ):
        self._max_workers = max_workers
        self._logger = logger

    def solve(self, phi: SignedMeasure, config: SolverConfig) -> SolveReport:
        check_existence_hypothesis(phi)
        center, _ = bounding_ball(phi)

        plus_nodes = phi.plus.nodes
        if phi.minus.is_empty and config.k >= len(plus_nodes):
            return self._sit_on_nodes(phi, config, center)

        with SOLVE_TIME.labels(self.name).time():
            workers = max(1, min(config.threads or self._max_workers, config.restarts))
            with ThreadPoolExecutor(max_workers=workers) as pool:
                runs = list(pool.map(lambda r: self._restart(phi, config, r), range(config.restarts)))

        f_bound = max(run.initial_value for run in runs)
        radius = boundedness_certificate(phi, f_bound)
        best_run = min(runs, key=_ordering_key)
        points = essential_cleanup(best_run.points, phi)
        points = clip_to_ball(points, center, radius)
        best = PointConfig(points)
        value = eval_F(best, phi)
        OBJECTIVE_EVALUATIONS.labels("full").inc(1 + sum(len(run.trace) for run in runs))

        self._logger.info(
            "local search finished",
            k=config.k,
            restarts=config.restarts,
            value=value.value,
            iterations=best_run.iterations,
            bounding_radius=radius,
        )
        return SolveReport(
            best=best,
            value=value.value,
            per_restart_values=[run.value for run in runs],
            iterations_used=best_run.iterations,
            bounding_radius=radius,
            seed=config.seed,
            solver=self.name,
            quadrature_step=value.quadrature_step,
            bounding_center=center,
            restart_points=[run.points for run in runs],
            traces=[run.trace for run in runs],
        )

    def _restart(self, phi: SignedMeasure, config: SolverConfig, restart: int) -> DescentResult:
        if config.init == "lattice" and restart == 0:
            initial = lattice_initial(phi.plus, config.k)
        else:
            initial = sample_initial(phi.plus, config.k, restart_generator(config.seed, restart))

        lower, upper = phi.plus.support_box()
        spread = float(np.linalg.norm(upper - lower))
        center, support_radius = bounding_ball(phi)
        nodes = phi.signed_nodes
        # certificate for F_bound = F(initial); every accepted iterate is projected into its ball
        radius = boundedness_certificate(phi, NearestAssignment(nodes, initial).value())
        scale = spread or support_radius or 1.0
        init_step = config.init_step or scale / config.k ** (1 / phi.dimension)

        descent = CoordinateDescent(
            nodes,
            init_step=init_step,
            max_step=scale,
            step_decay=config.step_decay,
            tol=config.tol,
            max_iters=config.max_iters,
            scale=scale,
            ball=(center, radius),
        )
        result = descent.run(initial)
        SOLVER_RESTARTS.labels(self.name).inc()
        OBJECTIVE_EVALUATIONS.labels("local").inc(result.local_evaluations)
        self._logger.debug(
            "restart finished",
            restart=restart,
            initial_value=result.initial_value,
            value=result.value,
            iterations=result.iterations,
        )
        return result

    def _sit_on_nodes(self, phi: SignedMeasure, config: SolverConfig, center: np.ndarray) -> SolveReport:
        best = PointConfig(phi.plus.nodes.points)
        value = eval_F(best, phi)
        self._logger.info("k covers every node, sitting on the nodes", k=config.k, nodes=len(best))
        return SolveReport(
            best=best,
            value=value.value,
            per_restart_values=[value.value],
            iterations_used=0,
            bounding_radius=boundedness_certificate(phi, value.value),
            seed=config.seed,
            solver=self.name,
            quadrature_step=value.quadrature_step,
            bounding_center=center,
            restart_points=[best.points.copy()],
        )
