"""Services implementation is located here."""

import structlog

from siglo.services.solver import KPointSolver

from .brute_force import BruteForceSolver
from .local_search import LocalSearchSolver


def make_solver(
    name: str,
    *,
    candidates=None,
    cap: int = 10**7,
    max_workers: int = 1,
    logger: structlog.stdlib.BoundLogger | None = None,
) -> KPointSolver:
    """Build a solver by name: `brute_force` or `local_search`."""
    logger = logger or structlog.get_logger(__name__)
    if name == BruteForceSolver.name:
        return BruteForceSolver(candidates=candidates, cap=cap, logger=logger)
    if name == LocalSearchSolver.name:
        return LocalSearchSolver(max_workers=max_workers, logger=logger)
    raise ValueError(f"unknown solver {name!r}")


__all__ = ["BruteForceSolver", "LocalSearchSolver", "make_solver"]
