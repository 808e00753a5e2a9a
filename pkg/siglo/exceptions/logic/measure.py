"""Exceptions raised by measure operations are defined here."""

from siglo.exceptions.base import SigloError


class MassMismatchError(SigloError):
    """Exception to raise when two measures compared by transport have different total masses."""

    def __init__(self, mass_mu: float, mass_nu: float):
        self.mass_mu = mass_mu
        self.mass_nu = mass_nu
        super().__init__()

    def __str__(self) -> str:
        return f"Measures must have equal total mass for W1: got {self.mass_mu!r} and {self.mass_nu!r}"


class EmptyMeasureError(SigloError):
    """Exception to raise when an operation needs a measure with at least one atom or positive cell."""

    def __init__(self, operation: str):
        self.operation = operation
        super().__init__()

    def __str__(self) -> str:
        return f"{self.operation} requires a non-empty measure"


class InvalidMeasureError(SigloError):
    """Exception to raise when measure data violates its invariants (negative weights, bad boxes, ...)."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__()

    def __str__(self) -> str:
        return f"Invalid measure: {self.reason}"
