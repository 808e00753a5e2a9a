"""Geometry exceptions are defined here."""

from siglo.exceptions.base import SigloError


class EmptyPointSetError(SigloError):
    """Exception to raise when a point set must not be empty."""

    def __init__(self, what: str):
        self.what = what
        super().__init__()

    def __str__(self) -> str:
        return f"{self.what} must contain at least one point"


class InvalidRegionError(SigloError):
    """Exception to raise when ball-complement region data is inconsistent."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__()

    def __str__(self) -> str:
        return f"Invalid ball-complement region: {self.reason}"
