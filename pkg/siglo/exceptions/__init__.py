"""siglo exceptions are located here."""

from .base import SigloError

__all__ = [
    "SigloError",
]
