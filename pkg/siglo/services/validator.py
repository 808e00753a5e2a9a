"""Validation battery interface is defined here."""

from abc import ABC, abstractmethod

from siglo.schemas import ValidateResult


class Validator(ABC):
    """An abstract interface for the numerical acceptance checks."""

    @abstractmethod
    def check_names(self, quick: bool = False) -> list[str]:
        """Names of the checks a run with the given `quick` flag executes."""

    @abstractmethod
    def run(self, quick: bool = False, checks: list[str] | None = None, theta_1: float | None = None) -> ValidateResult:
        """
        Run the checks.

        Args:
            quick: Skip the long checks.
            checks: Only run the named checks.
            theta_1: Override of the one-dimensional quantization constant the checks compare against.
        """
