"""All prometheus metrics collected by siglo runs are defined here."""

from prometheus_client import Counter, Histogram

OBJECTIVE_EVALUATIONS = Counter(
    "objective_evaluations_total", "Total number of objective evaluations (local or full)", ["kind"]
)
"""Objective evaluations counter: `full` for F on all nodes, `local` for the per-point restricted sums"""

SOLVER_RESTARTS = Counter("solver_restarts_total", "Total number of finished solver restarts", ["solver"])
"""Solver restarts counter"""

SOLVE_TIME = Histogram(
    "solve_seconds",
    "Solver wall time histogram",
    ["solver"],
    buckets=[0.01, 0.05, 0.2, 0.5, 1.0, 2.5, 5.0, 10.0, 30.0, 60.0, 120.0, 300.0, 600.0],
)
"""Solver wall time histogram in seconds"""

RUN_ERRORS = Counter("run_errors_total", "Total number of errors raised while running tasks", ["error_type"])
"""Total errors (caused by exceptions) counter"""

TASK_RUNS = Counter("task_runs_total", "Total number of finished scenario tasks", ["kind"])
"""Finished tasks counter"""

VALIDATION_CHECKS = Counter("validation_checks_total", "Total number of validation checks by status", ["status"])
"""Validation checks counter"""
