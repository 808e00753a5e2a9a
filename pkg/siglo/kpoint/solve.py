"""Function-style entry points of the k-point solvers."""

import structlog

from siglo.measure import SignedMeasure
from siglo.services.impl.brute_force import BruteForceSolver
from siglo.services.impl.local_search import LocalSearchSolver

from .types import SolveReport, SolverConfig


def brute_force(phi: SignedMeasure, candidates, k: int, cap: int = 10**7) -> SolveReport:
    """Exact minimum of F over every subset of at most k candidates."""
    solver = BruteForceSolver(candidates=candidates, cap=cap, logger=structlog.get_logger("siglo.kpoint"))
    return solver.solve(phi, SolverConfig(k=k, restarts=1))


def local_search(phi: SignedMeasure, cfg: SolverConfig, max_workers: int = 1) -> SolveReport:
    """Multistart coordinate-wise descent, best configuration over restarts."""
    return LocalSearchSolver(max_workers=max_workers, logger=structlog.get_logger("siglo.kpoint")).solve(phi, cfg)
