"""Output directory writer: results.json and CSV tables."""

import json
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd


def coordinate_columns(dimension: int) -> list[str]:
    return [f"x{i}" for i in range(dimension)]


class OutputWriter:
    """Single writer of one run's output directory. Files are written with fixed formatting so reruns compare equal."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def path(self, name: str) -> Path:
        return self.directory / name

    def write_json(self, name: str, document: dict[str, Any]) -> Path:
        path = self.path(name)
        with open(path, "w", encoding="utf-8") as file:
            json.dump(document, file, sort_keys=True, indent=2, allow_nan=True)
            file.write("\n")
        return path

    def write_table(self, name: str, frame: pd.DataFrame) -> Path:
        path = self.path(name)
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False, lineterminator="\n")
        return path

    def write_points(self, rows: Iterable[tuple[int, int, np.ndarray]], dimension: int) -> Path:
        """points.csv: one row per point with the k and restart it belongs to (restart -1 is the reported best)."""
        records = [
            [k, restart, *map(float, point)]
            for k, restart, points in rows
            for point in np.asarray(points, dtype=float).reshape(-1, dimension)
        ]
        frame = pd.DataFrame(records, columns=["k", "restart", *coordinate_columns(dimension)])
        return self.write_table("points.csv", frame)

    def write_density(self, midpoints: np.ndarray, values: np.ndarray) -> Path:
        frame = pd.DataFrame(midpoints, columns=coordinate_columns(midpoints.shape[1]))
        frame["value"] = np.asarray(values, dtype=float).ravel()
        return self.write_table("density.csv", frame)

    def write_series(self, name: str, x_name: str, y_name: str, pairs: Sequence[tuple[float, float]]) -> Path:
        """plotdata/<name>.csv: a two-column series with a header row."""
        frame = pd.DataFrame(list(pairs), columns=[x_name, y_name])
        return self.write_table(f"plotdata/{name}.csv", frame)
