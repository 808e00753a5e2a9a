"""Built-in scenarios, runnable by name from the command line."""

import math
from typing import Any

from siglo.exceptions.config import UnknownExampleError
from siglo.schemas import Scenario


def _line_instance() -> dict[str, Any]:
    """Unit density on [-2, 2] against density 4 on [-1/4, 1/4]: the optimal region is the complement of (-1, 1)."""
    return {
        "plus": {"densities": [{"lower": [-2.0], "upper": [2.0], "resolution": [4000], "expression": "1"}]},
        "minus": {"densities": [{"lower": [-0.25], "upper": [0.25], "resolution": [200], "expression": "4"}]},
    }


_BUILTIN: dict[str, dict[str, Any]] = {
    "fermat-weber-4.6": {
        "name": "fermat-weber-4.6",
        "dimension": 1,
        "seed": 0,
        "measure": {
            "plus": {"atoms": [{"location": [1.0], "weight": 2.0}, {"location": [8.0], "weight": 6.0}]},
            "minus": {"atoms": [{"location": [0.0], "weight": 1.0}, {"location": [4.0], "weight": 4.0}]},
        },
        "task": {
            "kind": "solve_k",
            "solver": "brute_force",
            "k": 2,
            "candidate_grid": {"lower": [0.0], "upper": [8.0], "resolution": [17]},
        },
    },
    "nonexistence-3.2": {
        "name": "nonexistence-3.2",
        "dimension": 2,
        "seed": 0,
        "task": {"kind": "probe", "radii": [0.5 * i for i in range(21)], "circle_nodes": 10_000},
    },
    "canonical-4.4": {
        "name": "canonical-4.4",
        "dimension": 2,
        "seed": 0,
        "measure": {
            "plus": {
                "densities": [
                    {
                        "lower": [-2.0, -2.0],
                        "upper": [2.0, 2.0],
                        "resolution": [800, 800],
                        "expression": "where(r < 2, 1 / (2 * pi), 0)",
                    }
                ]
            },
            "minus": {"atoms": [{"location": [0.0, 0.0], "weight": 1.0}]},
        },
        "task": {"kind": "region", "radii": [1.0], "mesh": 1e-5, "max_sweeps": 20},
    },
    "theta-1d": {
        "name": "theta-1d",
        "dimension": 1,
        "seed": 0,
        "task": {"kind": "theta", "n": 1, "k": 32, "restarts": 1, "grid_res": 1024, "init": "lattice"},
    },
    "certificates-1d": {
        "name": "certificates-1d",
        "dimension": 1,
        "seed": 0,
        "measure": _line_instance(),
        "task": {
            "kind": "region",
            "sigma": [[-1.5], [1.5]],
            "discretize_step": 0.05,
            "mesh": 1e-3,
            "enlargement": 0.1,
        },
    },
    "gamma-1d": {
        "name": "gamma-1d",
        "dimension": 1,
        "seed": 0,
        "measure": _line_instance(),
        "task": {
            "kind": "converge",
            "k_schedule": [4, 8, 16, 32, 64],
            "region": {"centers": [[0.0]], "radii": [1.0]},
            "restarts": 4,
        },
    },
    "gamma-2d": {
        "name": "gamma-2d",
        "dimension": 2,
        "seed": 0,
        "measure": {
            "plus": {
                "densities": [{"lower": [-2.0, -2.0], "upper": [2.0, 2.0], "resolution": [128, 128], "expression": "1"}]
            },
            "minus": {"atoms": [{"location": [0.0, 0.0], "weight": math.pi}]},
        },
        "task": {
            "kind": "converge",
            "k_schedule": [16, 64, 256],
            "region": {"centers": [[0.0, 0.0]], "radii": [1.0]},
            "restarts": 4,
            "init": "lattice",
        },
    },
}


def builtin_names() -> list[str]:
    return sorted(_BUILTIN)


def builtin_scenario(name: str) -> Scenario:
    """Return a fresh copy of the named built-in scenario."""
    if name not in _BUILTIN:
        raise UnknownExampleError(name, builtin_names())
    return Scenario.model_validate(_BUILTIN[name])
