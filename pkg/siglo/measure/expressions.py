"""Density expressions from scenario files are evaluated here.

An expression is a numpy formula in the coordinates `x0`, `x1`, ... (aliases `x`, `y`, `z`) and the
Euclidean norm `r`, e.g. `where(r < 2, 1 / (2 * pi), 0)`.
"""

from collections.abc import Callable

import numpy as np

from siglo.exceptions.logic.measure import InvalidMeasureError

_ALLOWED_NAMES = {
    "abs": np.abs,
    "sqrt": np.sqrt,
    "exp": np.exp,
    "log": np.log,
    "sin": np.sin,
    "cos": np.cos,
    "tan": np.tan,
    "arctan2": np.arctan2,
    "minimum": np.minimum,
    "maximum": np.maximum,
    "where": np.where,
    "clip": np.clip,
    "pi": np.pi,
    "e": np.e,
}


def compile_expression(expression: str, dimension: int) -> Callable[[np.ndarray], np.ndarray]:
    """Return a vectorized function of an (N, n) point array evaluating `expression`."""
    try:
        code = compile(expression, "<density>", "eval")
    except SyntaxError as exc:
        raise InvalidMeasureError(f"cannot parse density expression {expression!r}: {exc.msg}") from exc

    unknown = set(code.co_names) - set(_ALLOWED_NAMES) - {"x", "y", "z", "r"} - {f"x{i}" for i in range(dimension)}
    if unknown:
        raise InvalidMeasureError(f"unknown names in density expression {expression!r}: {sorted(unknown)}")

    def evaluate(points: np.ndarray) -> np.ndarray:
        namespace = dict(_ALLOWED_NAMES)
        for i in range(dimension):
            namespace[f"x{i}"] = points[:, i]
        for alias, i in (("x", 0), ("y", 1), ("z", 2)):
            if i < dimension:
                namespace[alias] = points[:, i]
        namespace["r"] = np.linalg.norm(points, axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            values = eval(code, {"__builtins__": {}}, namespace)  # pylint: disable=eval-used
        values = np.broadcast_to(np.asarray(values, dtype=float), (points.shape[0],))
        if not np.all(np.isfinite(values)) or np.any(values < 0):
            raise InvalidMeasureError(f"density expression {expression!r} must be finite and nonnegative")
        return values

    return evaluate
