"""Prometheus textfile export is defined here."""

from pathlib import Path

from prometheus_client import REGISTRY, CollectorRegistry, write_to_textfile


def write_metrics(path: str | Path, registry: CollectorRegistry = REGISTRY) -> Path:
    """Write the current state of the registry in the textfile exposition format."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    write_to_textfile(str(path), registry)
    return path
