"""Numerical laboratory for the signed-measure facility-location problem."""

__all__ = [
    "VERSION",
]

from .__version__ import VERSION
