"""Experiment runner implementation is defined here."""

import dataclasses
from collections.abc import Callable
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd
import structlog

from siglo.__version__ import VERSION
from siglo.asymptotics import (
    DensityField,
    convergence_report,
    estimate_theta,
    gamma_limit_value,
    known_theta,
    limit_density,
    theta_lower_bound,
)
from siglo.core.config import Config
from siglo.core.logging import attach_file_handler, detach_handler
from siglo.geometry import BallComplementRegion, PointConfig, external_ball_check
from siglo.kpoint import CandidateGrid, SolveReport, SolverConfig, nonexistence_probe
from siglo.kpoint.solve import local_search
from siglo.measure import MeasureComponent, SignedMeasure, ball_mass, discretize
from siglo.objective import ObjectiveValue, eval_F_region
from siglo.prometheus.metrics import TASK_RUNS
from siglo.prometheus.textfile import write_metrics
from siglo.region import (
    canonicalize,
    enlarged_mass,
    negative_atoms,
    optimality_report,
    optimize_radii,
    radial_field,
    separation_check,
)
from siglo.scenarios import builtin_scenario
from siglo.schemas import (
    ConvergenceRowModel,
    ConvergeResult,
    ConvergeTask,
    DensityResult,
    DensityTask,
    Estimate,
    ExampleTask,
    OptimalitySummary,
    ProbeResult,
    ProbeTask,
    RegionResult,
    RegionTask,
    ResultsDocument,
    Scenario,
    SolverParams,
    SolveKResult,
    SolveKTask,
    ThetaResult,
    ThetaTask,
    ValidateTask,
)
from siglo.services.runner import ExperimentRunner
from siglo.services.validator import Validator
from siglo.utils.output import OutputWriter, coordinate_columns

from .brute_force import BruteForceSolver
from .local_search import LocalSearchSolver

Handler = Callable[[Scenario, OutputWriter, structlog.stdlib.BoundLogger], dict[str, Any]]

_THETA_ESTIMATE_K = 64
_THETA_ESTIMATE_GRID = 32


def _estimate(value: ObjectiveValue) -> Estimate:
    return Estimate(value=value.value, error_bound=value.distance_error_bound, quadrature_step=value.quadrature_step)


class ExperimentRunnerImpl(ExperimentRunner):  # pylint: disable=too-few-public-methods
    """Dispatches scenario tasks to the numerical packages and owns the output directory of every run."""

    def __init__(
        self,
        config: Config,
        validator: Validator | None = None,
        logger: structlog.stdlib.BoundLogger = structlog.get_logger(__name__),
    ):
        self._config = config
        self._validator = validator
        self._logger = logger
        self._handlers: dict[str, Handler] = {
            "solve_k": self._solve_k,
            "region": self._region,
            "theta": self._theta,
            "density": self._density,
            "converge": self._converge,
            "probe": self._probe,
            "validate": self._validate,
            "example": self._example,
        }

    @property
    def _workers(self) -> int:
        return self._config.runtime.max_workers()

    def run(self, scenario: Scenario, output_dir: str | Path | None = None) -> ResultsDocument:
        if output_dir is None:
            output_dir = scenario.output_dir or Path(self._config.runtime.output_dir) / scenario.name
        writer = OutputWriter(output_dir)
        handler = attach_file_handler(writer.path("run.log"), self._config.logging.run_log_level)
        logger = self._logger.bind(scenario=scenario.name, seed=scenario.seed, kind=scenario.task.kind)
        try:
            logger.info("scenario started", output_dir=str(writer.directory))
            results = self._handlers[scenario.task.kind](scenario, writer, logger)
            document = ResultsDocument(
                name=scenario.name,
                kind=scenario.task.kind,
                version=VERSION,
                seed=scenario.seed,
                scenario=scenario.model_dump(mode="json"),
                config=self._config.to_order_dict(Config.NUMERIC_SECTIONS),
                results=results,
            )
            writer.write_json("results.json", document.model_dump(mode="json"))
            self._config.dump(writer.path("config.yaml"))
            TASK_RUNS.labels(scenario.task.kind).inc()
            logger.info("scenario finished")
            return document
        finally:
            if not self._config.metrics.disable:
                write_metrics(writer.path(self._config.metrics.filename))
            detach_handler(handler)

    def _solver_config(self, params: SolverParams, k: int, seed: int) -> SolverConfig:
        defaults = self._config.solver
        return SolverConfig(
            k=k,
            restarts=params.restarts or defaults.restarts,
            seed=seed,
            max_iters=params.max_iters or defaults.max_iters,
            init_step=params.init_step or defaults.init_step,
            step_decay=params.step_decay or defaults.step_decay,
            tol=params.tol or defaults.tol,
            init=params.init,
        )

    def _theta_for(self, n: int, override: float | None, seed: int, logger) -> float:
        theta = override or self._config.constants.get(n)
        if theta is None:
            logger.info("estimating quantization constant", n=n, k=_THETA_ESTIMATE_K)
            theta = estimate_theta(
                n, _THETA_ESTIMATE_K, 4, seed, _THETA_ESTIMATE_GRID, max_workers=self._workers
            )
        return theta

    @staticmethod
    def _measure(scenario: Scenario) -> SignedMeasure:
        return scenario.measure.to_measure(scenario.dimension)

    def _solve_k(self, scenario: Scenario, writer: OutputWriter, logger) -> dict[str, Any]:
        task: SolveKTask = scenario.task
        phi = self._measure(scenario)
        config = self._solver_config(task, task.k, scenario.seed)
        if task.candidate_grid is not None:
            grid = task.candidate_grid
            config = dataclasses.replace(
                config, candidate_grid=CandidateGrid(tuple(grid.lower), tuple(grid.upper), tuple(grid.resolution))
            )
        if task.solver == BruteForceSolver.name:
            solver = BruteForceSolver(
                candidates=task.candidates, cap=task.cap or self._config.solver.brute_force_cap, logger=logger
            )
        else:
            solver = LocalSearchSolver(max_workers=self._workers, logger=logger)
        report = solver.solve(phi, config)

        self._write_points(writer, report, task.k, scenario.dimension)
        for restart, trace in enumerate(report.traces):
            writer.write_series(f"trace_restart_{restart}", "sweep", "F", list(enumerate(trace)))
        return SolveKResult(
            solver=report.solver,
            k=task.k,
            best=report.best.points.tolist(),
            value=Estimate(value=report.value, quadrature_step=report.quadrature_step),
            per_restart_values=report.per_restart_values,
            iterations_used=report.iterations_used,
            bounding_radius=report.bounding_radius,
            bounding_center=[] if report.bounding_center is None else report.bounding_center.tolist(),
            solver_config=dataclasses.asdict(config),
        ).model_dump(mode="json")

    @staticmethod
    def _write_points(writer: OutputWriter, report: SolveReport, k: int, dimension: int) -> None:
        rows = [(k, -1, report.best.points)] + [(k, i, points) for i, points in enumerate(report.restart_points)]
        writer.write_points(rows, dimension)

    def _region(self, scenario: Scenario, writer: OutputWriter, logger) -> dict[str, Any]:
        task: RegionTask = scenario.task
        phi = self._measure(scenario)
        if task.discretize_step is not None:
            atoms = tuple(discretize(phi.minus, task.discretize_step))
            phi = SignedMeasure(plus=phi.plus, minus=MeasureComponent(atoms=atoms), dimension=phi.dimension)
            logger.debug("negative part discretized", atoms=len(atoms), step=task.discretize_step)

        region = self._initial_region(task, phi, scenario.seed, logger)
        initial = eval_F_region(region, phi, task.mesh)
        trace: list[float] = []
        value = initial
        if task.optimize:
            region, value = optimize_radii(phi, region, task.mesh, task.max_sweeps, trace)
        logger.info("region ready", balls=int(region.radii.size), value=value.value, initial=initial.value)

        fields = [radial_field(center, radius) for center, radius in zip(region.centers, region.radii)]
        report = optimality_report(region, phi, fields, task.mesh)
        writer.write_table(
            "region.csv",
            pd.DataFrame(
                np.column_stack([region.centers, region.radii]),
                columns=[*coordinate_columns(scenario.dimension), "radius"],
            ),
        )
        if trace:
            writer.write_series("region_trace", "sweep", "F", list(enumerate(trace)))
        return RegionResult(
            centers=region.centers.tolist(),
            radii=region.radii.tolist(),
            value=_estimate(value),
            initial_value=_estimate(initial),
            ball_masses=[ball_mass(phi.plus, c, r) for c, r in zip(region.centers, region.radii)],
            optimality=OptimalitySummary(**dataclasses.asdict(report)),
            separation=separation_check(phi).value,
            external_ball_condition=external_ball_check(region, region.min_radius, task.external_ball_samples),
            enlarged_mass=None if task.enlargement is None else enlarged_mass(region, phi, task.enlargement, task.mesh),
            trace=trace,
        ).model_dump(mode="json")

    def _initial_region(self, task: RegionTask, phi: SignedMeasure, seed: int, logger) -> BallComplementRegion:
        if task.radii is not None:
            centers, _ = negative_atoms(phi)
            return BallComplementRegion(centers=centers, radii=np.asarray(task.radii, dtype=float))
        if task.sigma is not None:
            return canonicalize(PointConfig.from_list(task.sigma, phi.dimension), phi)
        report = local_search(phi, self._solver_config(task, task.k, seed), max_workers=self._workers)
        logger.info("region seeded from local search", k=task.k, value=report.value)
        return canonicalize(report.best, phi)

    def _theta(self, scenario: Scenario, _writer: OutputWriter, logger) -> dict[str, Any]:
        task: ThetaTask = scenario.task
        theta = estimate_theta(
            task.n,
            task.k,
            task.restarts,
            scenario.seed,
            task.grid_res,
            init=task.init,
            max_iters=task.max_iters,
            tol=task.tol,
            max_workers=self._workers,
        )
        logger.info("quantization constant estimated", n=task.n, k=task.k, theta=theta)
        return ThetaResult(
            n=task.n,
            k=task.k,
            theta=Estimate(value=theta, quadrature_step=task.n**0.5 / task.grid_res),
            known=known_theta(task.n),
            lower_bound=theta_lower_bound(task.n),
        ).model_dump(mode="json")

    def _density(self, scenario: Scenario, writer: OutputWriter, logger) -> dict[str, Any]:
        task: DensityTask = scenario.task
        phi = self._measure(scenario)
        f_plus = DensityField(phi.plus.densities[0])
        region = BallComplementRegion(centers=np.asarray(task.region.centers), radii=np.asarray(task.region.radii))
        theta = self._theta_for(scenario.dimension, task.theta, scenario.seed, logger)

        rho = limit_density(f_plus, region)
        value = gamma_limit_value(rho, region, f_plus, theta)
        writer.write_density(rho.midpoints(), rho.values)
        logger.info("limit density computed", theta=theta, value=value)
        return DensityResult(
            theta=theta,
            mass=rho.mass(),
            gamma_limit_value=Estimate(value=value, quadrature_step=f_plus.grid.step),
            limit_energy=value,
        ).model_dump(mode="json")

    def _converge(self, scenario: Scenario, writer: OutputWriter, logger) -> dict[str, Any]:
        task: ConvergeTask = scenario.task
        phi = self._measure(scenario)
        f_plus = DensityField(phi.plus.densities[0])
        region = BallComplementRegion(centers=np.asarray(task.region.centers), radii=np.asarray(task.region.radii))
        theta = self._theta_for(scenario.dimension, task.theta, scenario.seed, logger)
        rho = limit_density(f_plus, region)
        energy = gamma_limit_value(rho, region, f_plus, theta)

        config = self._solver_config(task, task.k_schedule[0], scenario.seed)
        mesh = task.mesh if task.mesh is not None else max(phi.quadrature_step, 1e-3 * region.scene_diameter)
        rows = convergence_report(phi, task.k_schedule, config, region, rho, mesh=mesh, max_workers=self._workers)
        for row in rows:
            logger.info("convergence row", k=row.k, F=row.F_value, rescaled_gap=row.rescaled_gap)

        for column in ("F_value", "rescaled_gap", "hausdorff_to_M", "w1_to_rho"):
            writer.write_series(f"convergence_{column}", "k", column, [(row.k, getattr(row, column)) for row in rows])
        return ConvergeResult(
            theta=theta,
            limit_energy=energy,
            reference_value=_estimate(eval_F_region(region, phi, mesh)),
            rows=[ConvergenceRowModel(**dataclasses.asdict(row)) for row in rows],
        ).model_dump(mode="json")

    def _probe(self, scenario: Scenario, writer: OutputWriter, logger) -> dict[str, Any]:
        task: ProbeTask = scenario.task
        probe = nonexistence_probe(task.radii, task.circle_nodes)
        writer.write_series("nonexistence", "r", "F", probe.rows)
        logger.info("nonexistence probe finished", strictly_decreasing=probe.strictly_decreasing)
        return ProbeResult(
            rows=probe.rows,
            strictly_decreasing=probe.strictly_decreasing,
            no_minimizer_evidence=probe.strictly_decreasing,
        ).model_dump(mode="json")

    def _validate(self, scenario: Scenario, writer: OutputWriter, logger) -> dict[str, Any]:
        task: ValidateTask = scenario.task
        if self._validator is None:
            raise RuntimeError("runner was built without a validator")
        result = self._validator.run(quick=task.quick, checks=task.checks, theta_1=task.theta_1)
        writer.write_table("validation.csv", pd.DataFrame([check.model_dump() for check in result.checks]))
        logger.info("validation finished", passed=result.passed, checks=len(result.checks))
        return result.model_dump(mode="json")

    def _example(self, scenario: Scenario, writer: OutputWriter, _logger) -> dict[str, Any]:
        task: ExampleTask = scenario.task
        inner = self.run(builtin_scenario(task.name), writer.directory / task.name)
        return {"example": task.name, "kind": inner.kind, "results": inner.results}
