"""Application configuration class is defined here."""

import math
import os
from collections import OrderedDict
from dataclasses import dataclass, field
from pathlib import Path
from typing import TextIO

import yaml

from .logging import LoggingLevel

THREADS_ENVVAR = "SIGLO_THREADS"


@dataclass
class FileLogger:
    """Represents file-based logging configuration."""

    filename: str
    level: LoggingLevel


@dataclass
class LoggingConfig:
    """Represents the logging configuration for the application. `run_log_level` filters the run.log of every run."""

    level: LoggingLevel = "INFO"
    files: list[FileLogger] = field(default_factory=list)
    run_log_level: LoggingLevel = "DEBUG"

    def __post_init__(self):
        # If `files` is loaded as a list of dicts (e.g., from YAML), convert to FileLogger instances.
        if self.files and isinstance(self.files[0], dict):
            self.files = [FileLogger(**f) for f in self.files]


@dataclass
class MetricsConfig:
    """Represents Prometheus metrics configuration. Metrics are written to a textfile next to run outputs."""

    filename: str = "metrics.prom"
    disable: bool = False


@dataclass
class RuntimeConfig:
    """Parallelism and output location defaults."""

    threads: int | None = None
    output_dir: str = "out"

    def max_workers(self) -> int:
        """Return thread pool size: configured value (or CPU count) capped by SIGLO_THREADS when it is set."""
        workers = self.threads or os.cpu_count() or 1
        env_value = os.environ.get(THREADS_ENVVAR)
        if env_value:
            try:
                workers = min(workers, max(1, int(env_value)))
            except ValueError as exc:
                raise ValueError(f"{THREADS_ENVVAR} must be a positive integer, got {env_value!r}") from exc
        return max(1, workers)


@dataclass
class SolverDefaults:
    """Default parameters of the k-point solvers, overridable per scenario."""

    restarts: int = 8
    max_iters: int = 200
    init_step: float | None = None
    step_decay: float = 0.5
    tol: float = 1e-7
    brute_force_cap: int = 10**7


def _theta_2_closed_form() -> float:
    return (4 + 3 * math.log(3)) / (6 * math.sqrt(2) * 3**0.75)


@dataclass
class ConstantsConfig:
    """Quantization constants used by Gamma-limit computations. `None` means "estimate numerically"."""

    theta_1: float = 0.25
    theta_2: float = field(default_factory=_theta_2_closed_form)
    theta_3: float | None = None

    def get(self, n: int) -> float | None:
        """Return the configured constant for dimension `n`."""
        return {1: self.theta_1, 2: self.theta_2, 3: self.theta_3}.get(n)


@dataclass
class Config:
    """
    Main application configuration class.

    Combines all sub-configs. Loaded from YAML, dumped back whole or section by section.
    """

    logging: LoggingConfig
    metrics: MetricsConfig
    runtime: RuntimeConfig
    solver: SolverDefaults
    constants: ConstantsConfig

    _SECTIONS = ("logging", "metrics", "runtime", "solver", "constants")
    NUMERIC_SECTIONS = ("solver", "constants")

    def to_order_dict(self, sections: tuple[str, ...] | None = None) -> OrderedDict:
        """
        Convert this configuration to an OrderedDict recursively, suitable for YAML dumping.

        Args:
            sections (tuple[str, ...] | None): Sections to include, all of them when not set.

        Returns:
            OrderedDict: Ordered representation of the config.
        """

        def to_ordered_dict_recursive(obj) -> OrderedDict:
            if isinstance(obj, (dict, OrderedDict)):
                return OrderedDict((k, to_ordered_dict_recursive(v)) for k, v in obj.items())
            if isinstance(obj, list):
                return [to_ordered_dict_recursive(item) for item in obj]
            if hasattr(obj, "__dataclass_fields__"):
                return OrderedDict(
                    (field, to_ordered_dict_recursive(getattr(obj, field))) for field in obj.__dataclass_fields__
                )
            return obj

        return OrderedDict(
            (section, to_ordered_dict_recursive(getattr(self, section))) for section in sections or self._SECTIONS
        )

    def dump(self, file: str | Path | TextIO, sections: tuple[str, ...] | None = None) -> None:
        """
        Export the current configuration to a YAML file or stream.

        Args:
            file (str | Path | TextIO): Target file path or open file object.
            sections (tuple[str, ...] | None): Sections to export, all of them when not set.
        """

        class OrderedDumper(yaml.SafeDumper):
            """OrderedDump dump serializer."""

            def represent_dict_preserve_order(self, data):
                """Represent OrderedDict data as YAML dict."""
                return self.represent_dict(data.items())

        OrderedDumper.add_representer(OrderedDict, OrderedDumper.represent_dict_preserve_order)

        if isinstance(file, (str, Path)):
            with open(str(file), "w", encoding="utf-8") as file_w:
                yaml.dump(self.to_order_dict(sections), file_w, Dumper=OrderedDumper, default_flow_style=False)
        else:
            yaml.dump(self.to_order_dict(sections), file, Dumper=OrderedDumper, default_flow_style=False)

    @classmethod
    def example(cls) -> "Config":
        """
        Generate a sample Config instance for testing or default usage.

        Returns:
            Config: Example configuration.
        """
        return cls(
            logging=LoggingConfig(level="INFO", files=[]),
            metrics=MetricsConfig(),
            runtime=RuntimeConfig(),
            solver=SolverDefaults(),
            constants=ConstantsConfig(),
        )

    @classmethod
    def load(cls, file: str | Path | TextIO) -> "Config":
        """
        Load configuration from a YAML (or JSON) file or stream. Missing sections take their defaults.

        Args:
            file (str | Path | TextIO): Path or open file stream to read from.

        Returns:
            Config: Loaded configuration.

        Raises:
            ValueError: If the file can't be read or parsed.
        """
        try:
            if isinstance(file, (str, Path)):
                with open(file, "r", encoding="utf-8") as file_r:
                    data = yaml.safe_load(file_r)
            else:
                data = yaml.safe_load(file)
            data = data or {}

            return cls(
                logging=LoggingConfig(**data.get("logging", {})),
                metrics=MetricsConfig(**data.get("metrics", {})),
                runtime=RuntimeConfig(**data.get("runtime", {})),
                solver=SolverDefaults(**data.get("solver", {})),
                constants=ConstantsConfig(**data.get("constants", {})),
            )
        except Exception as exc:
            raise ValueError(f"Could not read app config file: {file}") from exc

    @classmethod
    def from_file_or_default(cls, config_path: str | None = None) -> "Config":
        """
        Load configuration from the provided file path or return a default example if not found.

        Args:
            config_path (str | None): File path to load config from (defaults to CONFIG_PATH env var).

        Returns:
            Config: Loaded or fallback configuration.
        """
        config_path = config_path or os.getenv("CONFIG_PATH")
        if not config_path:
            return cls.example()
        return cls.load(config_path)
