"""k-point problem: solver configuration and reports, boundedness certificates and the nonexistence probe.

Solvers live in `siglo.kpoint.solve` (function style) and `siglo.services.impl` (service style).
"""

from .certificates import boundedness_certificate, check_existence_hypothesis, nonexistence_probe
from .types import CandidateGrid, NonexistenceProbe, SolveReport, SolverConfig

__all__ = [
    "CandidateGrid",
    "NonexistenceProbe",
    "SolveReport",
    "SolverConfig",
    "boundedness_certificate",
    "check_existence_hypothesis",
    "nonexistence_probe",
]
