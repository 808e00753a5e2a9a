"""Exhaustive k-point solver implementation is defined here."""

import itertools
import math

import numpy as np
import structlog
from scipy.spatial.distance import cdist

from siglo.exceptions.logic.solver import EmptyCandidateListError, EnumerationCapError
from siglo.geometry import PointConfig
from siglo.geometry.types import as_points
from siglo.kpoint.certificates import boundedness_certificate, masses
from siglo.kpoint.types import SolveReport, SolverConfig
from siglo.measure import SignedMeasure, bounding_ball
from siglo.objective import eval_F
from siglo.prometheus.metrics import OBJECTIVE_EVALUATIONS, SOLVE_TIME, SOLVER_RESTARTS
from siglo.services.solver import KPointSolver

_BATCH_BUDGET = 4_000_000


def subset_count(candidates: int, k: int) -> int:
    """Number of nonempty subsets of size at most k."""
    return sum(math.comb(candidates, size) for size in range(1, min(k, candidates) + 1))


class BruteForceSolver(KPointSolver):
    """Evaluates F on every subset of at most k candidate points, smaller sizes and lexicographic order first."""

    name = "brute_force"

    def __init__(
        self,
        candidates=None,
        cap: int = 10**7,
        logger: structlog.stdlib.BoundLogger = structlog.get_logger(__name__),
    ):
        self._candidates = candidates
        self._cap = cap
        self._logger = logger

    def solve(self, phi: SignedMeasure, config: SolverConfig) -> SolveReport:
        candidates = self._resolve_candidates(phi, config)
        count = subset_count(candidates.shape[0], config.k)
        if count > self._cap:
            raise EnumerationCapError(count, self._cap)

        with SOLVE_TIME.labels(self.name).time():
            best_index = self._enumerate(phi, candidates, config.k)
        SOLVER_RESTARTS.labels(self.name).inc()
        OBJECTIVE_EVALUATIONS.labels("full").inc(count)

        best = PointConfig(candidates[list(best_index)])
        value = eval_F(best, phi)
        center, _ = bounding_ball(phi)
        mass_plus, mass_minus = masses(phi)
        radius = boundedness_certificate(phi, value.value) if mass_plus > mass_minus else math.inf

        self._logger.info(
            "exhaustive search finished",
            candidates=candidates.shape[0],
            k=config.k,
            subsets=count,
            value=value.value,
        )
        return SolveReport(
            best=best,
            value=value.value,
            per_restart_values=[value.value],
            iterations_used=count,
            bounding_radius=radius,
            seed=config.seed,
            solver=self.name,
            quadrature_step=value.quadrature_step,
            bounding_center=center,
            restart_points=[best.points.copy()],
        )

    def _resolve_candidates(self, phi: SignedMeasure, config: SolverConfig) -> np.ndarray:
        if self._candidates is not None:
            candidates = as_points(self._candidates, phi.dimension)
        elif config.candidate_grid is not None:
            candidates = config.candidate_grid.points()
        else:
            raise EmptyCandidateListError()
        if candidates.shape[0] == 0:
            raise EmptyCandidateListError()
        return candidates

    def _enumerate(self, phi: SignedMeasure, candidates: np.ndarray, k: int) -> tuple[int, ...]:
        nodes = phi.signed_nodes
        distances = cdist(nodes.points, candidates)
        best_value, best_index = math.inf, (0,)
        for size in range(1, min(k, candidates.shape[0]) + 1):
            batch = max(1, _BATCH_BUDGET // max(1, len(nodes) * size))
            subsets = itertools.combinations(range(candidates.shape[0]), size)
            while True:
                chunk = list(itertools.islice(subsets, batch))
                if not chunk:
                    break
                index = np.array(chunk, dtype=np.int64)
                values = nodes.weights @ distances[:, index].min(axis=2)
                position = int(np.argmin(values))
                if values[position] < best_value:
                    best_value, best_index = float(values[position]), chunk[position]
        return best_index
