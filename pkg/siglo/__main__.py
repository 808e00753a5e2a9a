"""Main function is defined here."""

import functools
import os
import sys
import traceback
import typing as tp
from dataclasses import dataclass
from pathlib import Path

import click
import structlog
from dotenv import load_dotenv

from siglo.core.config import Config
from siglo.core.logging import configure_logging
from siglo.exceptions import SigloError
from siglo.prometheus.metrics import RUN_ERRORS
from siglo.scenarios import builtin_names, builtin_scenario, load_scenario
from siglo.schemas import ResultsDocument, Scenario
from siglo.services.impl.runner import ExperimentRunnerImpl
from siglo.services.impl.validator import ValidatorImpl

LogLevel = tp.Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


@dataclass
class AppContext:
    """Objects shared by all commands."""

    config: Config
    logger: structlog.stdlib.BoundLogger
    debug: bool

    def runner(self) -> ExperimentRunnerImpl:
        return ExperimentRunnerImpl(
            self.config, validator=ValidatorImpl(self.config, logger=self.logger), logger=self.logger
        )


def _handle_exceptions(func: tp.Callable) -> tp.Callable:
    """Turn errors into a one-line message, an error metric and the process exit code."""

    @functools.wraps(func)
    def wrapper(app: AppContext, *args, **kwargs):
        try:
            return func(app, *args, **kwargs)
        except Exception as exc:  # pylint: disable=broad-except
            RUN_ERRORS.labels(error_type=type(exc).__name__).inc()
            exit_code = 1
            if isinstance(exc, SigloError):
                exit_code = exc.get_exit_code()
            elif isinstance(exc, ValueError):
                exit_code = 2
            app.logger.error("run failed", error=str(exc), error_type=type(exc).__name__)
            if app.debug:
                click.echo("".join(traceback.format_exception(exc)), err=True)
            click.echo(f"error: {exc}", err=True)
            sys.exit(exit_code)

    return wrapper


def _summary(document: ResultsDocument) -> str:
    return f"{document.name}: {document.kind} finished, seed {document.seed}"


@click.group("siglo")
@click.option(
    "--config_path",
    envvar="CONFIG_PATH",
    type=click.Path(exists=True, dir_okay=False, path_type=str),
    show_envvar=True,
    help="Path to YAML configuration file, defaults are used when not set",
)
@click.option(
    "--logger_verbosity",
    "-v",
    type=click.Choice(("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")),
    envvar="LOGGER_VERBOSITY",
    show_envvar=True,
    help="Logger verbosity",
)
@click.option(
    "--debug",
    envvar="DEBUG",
    is_flag=True,
    help="Print tracebacks of failed runs",
)
@click.pass_context
def cli(ctx: click.Context, config_path: str | None, logger_verbosity: LogLevel | None, debug: bool):
    """
    Signed-measure facility-location laboratory: k-point solvers, ball-complement regions
    and asymptotic density experiments.
    """
    config = Config.from_file_or_default(config_path)
    if logger_verbosity is not None:
        config.logging.level = logger_verbosity
    logger = configure_logging(
        config.logging.level,
        files={file.filename: file.level for file in config.logging.files},
        run_log_level=config.logging.run_log_level,
    )
    ctx.obj = AppContext(config=config, logger=logger, debug=debug)


@cli.command("run")
@click.argument("scenario_path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--output-dir", "-o", type=click.Path(file_okay=False, path_type=Path), help="Output directory")
@click.pass_obj
@_handle_exceptions
def run(app: AppContext, scenario_path: Path, output_dir: Path | None):
    """Run a scenario file (YAML or JSON)."""
    scenario = load_scenario(scenario_path)
    click.echo(_summary(app.runner().run(scenario, output_dir)))


@cli.command("example")
@click.argument("name", type=click.Choice(builtin_names()))
@click.option("--output-dir", "-o", type=click.Path(file_okay=False, path_type=Path), help="Output directory")
@click.pass_obj
@_handle_exceptions
def example(app: AppContext, name: str, output_dir: Path | None):
    """Run a built-in scenario."""
    click.echo(_summary(app.runner().run(builtin_scenario(name), output_dir)))


@cli.command("validate")
@click.option("--quick", is_flag=True, help="Skip the long checks")
@click.option("--check", "checks", multiple=True, help="Run only the named check (repeatable)")
@click.option("--theta1", type=float, help="Override of the one-dimensional quantization constant")
@click.option("--output-dir", "-o", type=click.Path(file_okay=False, path_type=Path), help="Output directory")
@click.pass_obj
@_handle_exceptions
def validate(app: AppContext, quick: bool, checks: tuple[str, ...], theta1: float | None, output_dir: Path | None):
    """Run the numerical acceptance checks; exit code 1 when any of them fails."""
    scenario = Scenario.model_validate(
        {
            "name": "validate",
            "seed": 0,
            "task": {"kind": "validate", "quick": quick, "checks": list(checks) or None, "theta_1": theta1},
        }
    )
    document = app.runner().run(scenario, output_dir)
    for check in document.results["checks"]:
        click.echo(f"{check['status']:>7}  {check['name']}  {check['detail']}")
    if not document.results["passed"]:
        sys.exit(1)


@cli.command("theta")
@click.option("--n", "n", type=click.IntRange(1, 3), required=True, help="Dimension")
@click.option("--k", "k", type=click.IntRange(min=1), required=True, help="Number of points")
@click.option("--restarts", type=click.IntRange(min=1), default=8, show_default=True)
@click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--grid-res", type=click.IntRange(min=1), default=256, show_default=True, help="Cells per axis")
@click.option("--init", type=click.Choice(("sample", "lattice")), default="lattice", show_default=True)
@click.option("--output-dir", "-o", type=click.Path(file_okay=False, path_type=Path), help="Output directory")
@click.pass_obj
@_handle_exceptions
def theta(  # pylint: disable=too-many-arguments
    app: AppContext,
    n: int,
    k: int,
    restarts: int,
    seed: int,
    grid_res: int,
    init: str,
    output_dir: Path | None,
):
    """Estimate the quantization constant of the unit cube."""
    scenario = Scenario.model_validate(
        {
            "name": f"theta-{n}d-k{k}",
            "dimension": n,
            "seed": seed,
            "task": {"kind": "theta", "n": n, "k": k, "restarts": restarts, "grid_res": grid_res, "init": init},
        }
    )
    document = app.runner().run(scenario, output_dir)
    click.echo(f"theta_{n} ~ {document.results['theta']['value']:.6f} (k = {k})")


def main():
    """Console entry point: loads the env file before options are read from the environment."""
    load_dotenv(os.environ.get("ENVFILE", ".env"))
    cli()  # pylint: disable=no-value-for-parameter


if __name__ == "__main__":
    main()
