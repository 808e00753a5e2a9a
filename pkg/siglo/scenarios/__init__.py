"""Scenario loading and built-in scenarios."""

from .builtin import builtin_names, builtin_scenario
from .loader import load_scenario, parse_scenario

__all__ = [
    "builtin_names",
    "builtin_scenario",
    "load_scenario",
    "parse_scenario",
]
