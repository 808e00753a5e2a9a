"""k-point solver interface is defined here."""

from abc import ABC, abstractmethod

from siglo.kpoint.types import SolveReport, SolverConfig
from siglo.measure import SignedMeasure


class KPointSolver(ABC):
    """An abstract interface for minimizing F over configurations of at most k points."""

    name: str

    @abstractmethod
    def solve(self, phi: SignedMeasure, config: SolverConfig) -> SolveReport:
        """
        Find a configuration of at most `config.k` points with the smallest F value the method can reach.

        Args:
            phi: Signed measure with m+ > m-.
            config: Solver parameters.

        Returns:
            SolveReport where `value` equals eval_F(best, phi) up to summation order.
        """
